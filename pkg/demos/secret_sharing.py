"""Secret sharing walkthrough on a [9,3]_3 minimal code.

Column 1 of the generator carries the secret; columns 2..9 are the
participants. A coalition can reconstruct exactly when the secret
column lies in the span of its own columns, and the minimal coalitions
can be read off the dual code. Dealings are seeded, so every run of
this script prints the same shares.
"""

from mincodes import (SssScheme, deal, first, is_authorized,
                      minimal_authorized_sets, perfectness_check,
                      reconstruct)


def main():
    scheme = SssScheme(first(3, 3))
    print(f"scheme on [{scheme.code.n},{scheme.code.k}]_3, "
          f"participants {scheme.participants}")

    shares = deal(scheme, secret=2, seed=5)
    print("dealt shares for secret 2, seed 5:")
    for i in scheme.participants:
        print(f"  participant {i}: {shares.shares[i]}")
    print()

    sets = minimal_authorized_sets(scheme)
    print(f"{len(sets)} minimal authorized coalitions, smallest ones:")
    for aset in sets[:6]:
        print(f"  {aset.indices}")
    print()

    coalition = sets[0].indices
    got = reconstruct(scheme, coalition,
                      [shares.shares[i] for i in coalition])
    print(f"coalition {coalition} reconstructs: {got}")
    print(f"is_authorized({{2}}): {is_authorized(scheme, [2])}")
    print()

    for subset in ([2], [2, 4]):
        rep = perfectness_check(scheme, subset)
        kind = "authorized" if rep.authorized else "unauthorized"
        print(f"perfectness over all 27 dealings, coalition {subset} "
              f"({kind}): {'ok' if rep.ok else 'LEAK'}")
    print()
    print("unauthorized coalitions see share patterns that are equally")
    print("consistent with every secret; authorized ones pin it down.")


if __name__ == "__main__":
    main()
