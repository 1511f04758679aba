"""Order-two elements of GL_2(Z), and what an involution looks like to the
mapping class group.

Every non-central integer 2x2 involution is conjugate to S = diag(1,-1) or
to the swap matrix T, decided by the parity of the off-diagonal entries;
``gl2_reduce`` produces an explicit conjugator.  Projecting surface
involutions to mapping classes loses information: the fibers below record
how many actions share one mapping class.
"""

from collections import Counter

from c2surf.gl2 import IntMatrix2, S_REP, T_REP, gamma_table, gl2_class, gl2_reduce


def main() -> None:
    samples = [
        IntMatrix2(1, 1, 0, -1),
        IntMatrix2(3, 4, -2, -3),
        IntMatrix2(3, 2, -4, -3),
        IntMatrix2(7, -4, 12, -7),
    ]
    print("Classifying integer involutions:")
    for m in samples:
        cls, witness = gl2_reduce(m)
        rep = S_REP if cls.value == "Sclass" else T_REP
        assert witness.inverse() @ rep @ witness == m
        print(f"  {m!r}: {cls.value:<7} witness {witness!r}")

    print("\nParity rule vs witness search never disagree:")
    m = IntMatrix2(11, 30, -4, -11)
    print(f"  {m!r}: parity says {gl2_class(m).value}, reduce agrees: {gl2_reduce(m)[0].value}")

    for surface in ("sphere", "torus", "klein"):
        table = gamma_table(surface)
        fibers = Counter(
            v.value if hasattr(v, "value") else v for v in table.values()
        )
        print(f"\n{surface}: action -> mapping class")
        for word, value in table.items():
            shown = value.value if hasattr(value, "value") else value
            print(f"  {word:<12} -> {shown}")
        print(f"  fiber sizes: {dict(fibers)}")


if __name__ == "__main__":
    main()
