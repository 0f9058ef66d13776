#!/usr/bin/env python3
"""Rebuild the frozen anodyne certificate table by search.

Finds a horn decomposition for the pushout-product of each horn inclusion
(n <= 2) with each sphere inclusion (m <= 2) and freezes the results into
src/awfslab/data/anodyne.json.  The (1,0,1) entry keeps its pinned
attachment order rather than the search order, so a rebuild is a no-op
unless the search or the complexes changed."""

from awfslab import sset


def main():
    table = {}
    for n in (1, 2):
        for k in range(n + 1):
            for m in (0, 1, 2):
                if (n, k, m) == (1, 0, 1):
                    steps = list(sset.pinned_101_steps())
                else:
                    target = sset.anodyne_target(n, k, m)
                    steps = list(sset.horn_certificate_search(target).steps)
                cert = sset.CellularCertificate(
                    sset.anodyne_target(n, k, m), tuple(steps), "J")
                rep = sset.certificate_verify(cert)
                assert rep["ok"], ((n, k, m), rep["violations"][:3])
                table[(n, k, m)] = steps
                print(f"({n},{k},{m}): {len(steps)} steps")
    sset.save_anodyne_table(table)
    print(f"wrote {len(table)} entries")


if __name__ == "__main__":
    main()
