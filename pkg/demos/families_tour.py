"""A quick tour of every construction family.

Builds one small instance per family, prints its parameters, and runs
the three verdicts (minimality, weight ratio, value coverage) on each.
"""

from mincodes import (ab_condition, cf_code, cg_code, extended, first,
                      has_full_value_property, is_minimal_code,
                      min_max_weight, second, tensor_product, weight_s)


def describe(label, code):
    d, wmax = min_max_weight(code)
    minimal = is_minimal_code(code)
    ab = ab_condition(code)
    fv = has_full_value_property(code)
    print(f"{label:28s} [{code.n},{code.k},{d}]_{code.q}"
          f"  minimal={'yes' if minimal.is_minimal else 'no'}"
          f"  ratio={ab.ratio}"
          f"{' (sufficient)' if ab.sufficient else ''}"
          f"  full-value={'yes' if fv.holds else 'no'}")
    return code


def main():
    print("family                       parameters  verdicts")
    describe("first(3,3)", first(3, 3))
    describe("first(4,3)", first(4, 3))
    describe("second(4,3,3)", second(4, 3, 3))
    describe("weight_s(2,4,3)", weight_s(2, 4, 3))
    describe("extended(3,3)", extended(3, 3))
    a = describe("first(2,3)", first(2, 3))
    describe("first(2,3) x first(2,3)", tensor_product(a, a))
    describe("cf_code(4,2,3,(1,2))", cf_code(4, 2, 3, (1, 2)))
    describe("cg_code(2,2,2)", cg_code(2, 2, 2))
    print()
    print("note: a ratio above (q-1)/q makes minimality automatic; the")
    print("families stay minimal even where the ratio test is silent.")


if __name__ == "__main__":
    main()
