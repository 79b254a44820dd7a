"""Extending a code by powers of a field element, then lifting it.

The extended family appends q-2 scaled copies of the first column, and
stays minimal while gaining the full-value property (every nonzero
codeword takes all q field values). That property is exactly what the
inductive lift needs as a precondition; this script shows one lift
succeeding, what the lifted generator looks like, and how the
constructor refuses a base code that does not qualify.
"""

from mincodes import (PreconditionFailed, extended, first,
                      has_full_value_property, is_minimal_code, lift)


def verdicts(label, code):
    minimal = is_minimal_code(code).is_minimal
    fv = has_full_value_property(code).holds
    print(f"{label}: [{code.n},{code.k}]_{code.q} "
          f"minimal={'yes' if minimal else 'no'} "
          f"full-value={'yes' if fv else 'no'}")


def main():
    base = first(3, 3)
    verdicts("first(3,3)", base)
    ext = extended(3, 3)
    verdicts("extended(3,3)", ext)
    print()

    lifted = lift(ext, 1)
    verdicts("lift(extended(3,3), 1)", lifted)
    print("lifted generator (one all-ones row over two copies):")
    for row in lifted.gen.data:
        print("  " + " ".join(str(int(x)) for x in row))
    print()

    print("lift refuses a base without the full-value property:")
    try:
        lift(base, 1)
    except PreconditionFailed as exc:
        print(f"  lift(first(3,3), 1) -> PreconditionFailed: {exc}")
    print()
    print("over GF(2) the lift composes: each lift of a fit base is")
    print("again minimal and full-valued, so it can be lifted once more.")
    twice = lift(lift(first(2, 2), 1), 1)
    verdicts("lift(lift(first(2,2),1),1)", twice)


if __name__ == "__main__":
    main()
