"""Regenerate src/ybetools/fixtures/*.json from cycle-notation transcriptions."""
import json
from pathlib import Path

from ybetools.solutions import Solution

OUT = Path(__file__).resolve().parents[1] / "src" / "ybetools" / "fixtures"

T413 = [
    # (sigma, tau) per point, four solutions: block 1 left/right, block 2 left/right
    [("(3745)", "(3648)", "(3745)(68)", "(3648)(57)"),
     ("(3745)", "(3648)", "(3745)(68)", "(3648)(57)"),
     ("(1826)", "(1527)", "(1826)(57)", "(1527)(68)"),
     ("(1826)", "(1527)", "(1826)(57)", "(1527)(68)"),
     ("(13872465)", "(16542873)", "(1465)(2387)", "(1654)(2873)"),
     ("(17842563)", "(13562478)", "(1784)(2563)", "(1478)(2356)"),
     ("(13872465)", "(16542873)", "(1465)(2387)", "(1654)(2873)"),
     ("(17842563)", "(13562478)", "(1784)(2563)", "(1478)(2356)")],
    [("(12)(4675)", "(12)(3685)", "(12)(35)(4867)", "(12)(3857)(46)"),
     ("(12)(4675)", "(12)(3685)", "(12)(35)(4867)", "(12)(3857)(46)"),
     ("(1435)(2786)", "(1578)(2643)", "(16582437)", "(17652843)"),
     ("(1587)(2634)", "(1345)(2876)", "(17562834)", "(15682347)"),
     ("(1823)(56)", "(1724)(56)", "(16582437)", "(17652843)"),
     ("(1823)(56)", "(1724)(56)", "(17562834)", "(15682347)"),
     ("(1587)(2634)", "(1345)(2876)", "(1325)(46)(78)", "(1426)(35)(78)"),
     ("(1435)(2786)", "(1578)(2643)", "(1325)(46)(78)", "(1426)(35)(78)")],
]

T419 = [
    [("(12)(78)", "(14)(67)", "(12)(35)(46)(78)", "(14)(28)(35)(67)"),
     ("(1584)(2673)", "(1265)(3784)", "(1324)(5867)", "(1243)(5786)"),
     ("(34)(56)", "(23)(58)", "(17)(28)(34)(56)", "(17)(23)(46)(58)"),
     ("(1485)(2376)", "(1562)(3487)", "(1423)(5768)", "(1342)(5687)"),
     ("(34)(56)", "(23)(58)", "(17)(28)(34)(56)", "(17)(23)(46)(58)"),
     ("(1485)(2376)", "(1562)(3487)", "(1423)(5768)", "(1342)(5687)"),
     ("(12)(78)", "(14)(67)", "(12)(35)(46)(78)", "(14)(28)(35)(67)"),
     ("(1584)(2673)", "(1265)(3784)", "(1324)(5867)", "(1243)(5786)")],
    [("(13687542)", "(13867524)", "(1652)", "(1854)"),
     ("(17)(2583)(46)", "(1278)(35)(46)", "(17645328)", "(12835647)"),
     ("(18657243)", "(16857423)", "(3874)", "(2367)"),
     ("(1476)(28)(35)", "(17)(28)(3456)", "(14635827)", "(17825346)"),
     ("(18657243)", "(16857423)", "(1652)", "(1854)"),
     ("(1476)(28)(35)", "(17)(28)(3456)", "(17645328)", "(12835647)"),
     ("(13687542)", "(13867524)", "(3874)", "(2367)"),
     ("(17)(2583)(46)", "(1278)(35)(46)", "(14635827)", "(17825346)")],
]


def table_solutions(blocks):
    out = []
    for block in blocks:
        for half in (0, 2):
            out.append(([row[half] for row in block], [row[half + 1] for row in block]))
    return out


FIXTURES = {
    "prop-4-13": ("irretractable involutive solution of size 4, Jespers-Okninski example",
                  ["(34)", "(1324)", "(1423)", "(12)"], ["(24)", "(1432)", "(1234)", "(13)"]),
    "prop-4-19": ("irretractable involutive solution of size 4 (second one)",
                  ["(12)", "(1324)", "(34)", "(1423)"], ["(14)", "(1243)", "(23)", "(1342)"]),
    "prop-GI": ("square-free irretractable involutive solution of size 8",
                ["(78)", "(56)", "(25)(46)(78)", "(17)(38)(56)",
                 "(24)", "(17)(24)(38)", "(13)", "(13)(25)(46)"], None),
    "exa-15579": ("size-8 solution retracting to prop-4-13 (first entry of table 4-13)",
                  *table_solutions(T413)[0]),
    "mp-example": ("square-free multipermutation solution of size 4 with Klein permutation group",
                   ["()", "()", "(34)", "(12)(34)"], None),
    "lyubashenko": ("Lyubashenko solution r(x,y) = (s(y), t(x)) with s = t = (12)",
                    ["(12)", "(12)"], ["(12)", "(12)"]),
}
for i, (s, t) in enumerate(table_solutions(T413), 1):
    FIXTURES[f"table-4-13-{i}"] = (f"solution {i} of the table retracting to prop-4-13", s, t)
for i, (s, t) in enumerate(table_solutions(T419), 1):
    FIXTURES[f"table-4-19-{i}"] = (f"solution {i} of the table retracting to prop-4-19", s, t)


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for name, (prov, sigma, tau) in FIXTURES.items():
        sol = Solution.from_cycles(sigma, tau)
        doc = {"provenance": prov,
               "sigma_cycles": sigma,
               "tau_cycles": tau if tau is not None else sigma,
               **sol.to_json_dict()}
        (OUT / f"{name}.json").write_text(json.dumps(doc, indent=1) + "\n")
        print("wrote", name)


if __name__ == "__main__":
    main()
