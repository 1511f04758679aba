"""Deciding whether two surgery words describe the same involution.

Surgery decompositions are far from unique.  Rewriting maps words towards
fixed representative families (equal normal forms certify isomorphism), and
the invariant tuple -- surface, taxonomy, sign, separation, DD -- decides
the rest.
"""

from c2surf.classify import Action, decide_isomorphic
from c2surf.words import format_word, normalize, parse_word


PAIRS = [
    # the two Klein-bottle descriptions with two fixed points
    ("S22+DCC", "S2a+S11AT"),
    # a doubled non-orientable surface, written two ways
    ("S22+3DCC", "S2a+2DCC+S11AT"),
    # antipodal tori shed their genus into crosscaps
    ("Tanti(2)+DCC", "S2a+3DCC"),
    ("Trot(3)+DCC", "Tanti(1)+3DCC"),
    # same taxonomy on N_6, separated by the separation invariant
    ("S2a+DCC+2S10AT", "S21+2DCC+S10AT"),
    # same taxonomy and separation on N_6, separated by DD
    ("S2a+2DCC+S10AT", "Tanti(1)+DCC+S10AT"),
]


def main() -> None:
    for left, right in PAIRS:
        a, b = Action.from_word(parse_word(left)), Action.from_word(parse_word(right))
        verdict = decide_isomorphic(a, b)
        print(f"{left}  vs  {right}")
        print(f"  normal forms: {format_word(normalize(a.word))} / {format_word(normalize(b.word))}")
        print(f"  taxonomies:   {a.taxonomy!r} / {b.taxonomy!r}")
        print(f"  eps:          {a.epsilon.value} / {b.epsilon.value}")
        print(f"  DD:           {a.dd} / {b.dd}")
        print(f"  isomorphic:   {verdict}\n")


if __name__ == "__main__":
    main()
