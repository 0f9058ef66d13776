#!/usr/bin/env python3
"""Print the two horn-pushout decompositions of the trough inclusion.

The trough is the pushout-product of the left horn of the interval with
the middle horn of the triangle.  Both decompositions are valid cellular
certificates but they diverge, and the final triangle is filled by a
2-dimensional horn in one and a 3-dimensional horn in the other: the
certificate structure genuinely depends on the order of attachment.
"""

from awfslab import sset


def main():
    rep = sset.trough_demo()
    print(f"target: {rep['target'].dom.name} -> {rep['target'].cod.name}")
    for label in ("a", "b"):
        cert = rep[f"cert_{label}"]
        print(f"\nstructure {label.upper()} ({len(cert.steps)} steps, "
              f"valid={rep[f'{label}_valid']}):")
        for i, s in enumerate(cert.steps):
            print(f"  {i}: horn({s.n},{s.k}) filler {s.filler}")
    print(f"\nstructures equal: {rep['equal']}")
    print(f"first divergence: step {rep['first_divergence'][0]}")
    print(f"end triangle {rep['end_triangle']} filled in dimension "
          f"{rep['end_triangle_dim_a']} (A) vs {rep['end_triangle_dim_b']} (B)")


if __name__ == "__main__":
    main()
