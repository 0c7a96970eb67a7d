#!/usr/bin/env python3
"""Build the extremal families and watch their domination numbers move.

Families A and B iterate the octahedron clique-sum on a fresh triangle:
order grows by 3 per step while gamma_c climbs to n/3.  The increment per
step is readable off the chosen face: if it avoids every minimum connected
dominating set the value jumps by 2, if it meets each at most once the value
climbs by 1.  The icosahedron chains make gamma_c - gamma arbitrarily large.
"""

import tridom as td


def family_walk(which: str, k_max: int) -> None:
    t, site = td.family_base(which)
    g = td.underlying_graph(t)
    print(f"\nfamily {which}: base has n={t.n}, gamma={td.exact_gamma(g).value}, "
          f"gamma_c={td.exact_gamma_c(g).value}, designated face {site}")
    k = 3
    while k < k_max:
        rep = td.octahedron_sum_report(t, site)
        if rep.predicted_increment is None:
            verdict = "no prediction for overlap >= 2"
        else:
            verdict = (f"predicted +{rep.predicted_increment}, "
                       + ("matches" if rep.consistent else "MISMATCH"))
        print(f"  sum on {site}: face meets minimum sets {rep.face_hits}x, "
              f"gamma_c {rep.base_value} -> {rep.summed_value} ({verdict})")
        prev = t
        t = td.octahedron_sum(t, site)
        site = td.new_triangle(prev)
        k += 1
    print(f"  final member: n={t.n} = 3*{k}, gamma_c={td.exact_gamma_c(td.underlying_graph(t)).value}")


def chains() -> None:
    print("\nicosahedron chains: gamma_c - gamma = 2k - 1 grows without bound")
    for k in (2, 3):
        t = td.icosa_chain(k)
        g = td.underlying_graph(t)
        gamma = td.exact_gamma(g).value
        gamma_c = td.exact_gamma_c(g).value
        print(f"  k={k}: n={t.n}, gamma={gamma}, gamma_c={gamma_c}, gap={gamma_c - gamma}")


def main() -> None:
    ico = td.underlying_graph(td.icosahedron())
    print(f"icosahedron: gamma={td.exact_gamma(ico).value}, "
          f"gamma_c={td.exact_gamma_c(ico).value} "
          "(the smallest triangulation with gap > 1)")
    family_walk("A", 6)
    family_walk("B", 6)
    chains()


if __name__ == "__main__":
    main()
