"""Listing every involution on small surfaces.

Each action is a surgery word: a base equivariant surface plus crosscap
pairs (DCC), dual tori (DT), three kinds of antitube, and fixed-point-to-
Moebius trades (FM).  The enumeration emits one representative per
isomorphism class, organised by taxonomy [F, C:(C+,C-)] and quotient sign.
"""

from c2surf.classify import enumerate_nonorientable, enumerate_torus, taxonomy_cells
from c2surf.words import format_word


def main() -> None:
    print("The six involutions on the torus T_1:")
    for action in enumerate_torus(1):
        tax = repr(action.taxonomy) if action.taxonomy else "(trivial)"
        print(f"  {format_word(action.word):<14} {tax}")

    print("\nThe Klein bottle N_2, nontrivial actions:")
    for action in enumerate_nonorientable(2, include_trivial=False):
        print(
            f"  {format_word(action.word):<12} {action.taxonomy!r:<16} "
            f"eps={action.epsilon.value:<7} dd={action.dd}"
        )

    print("\nN_6 grouped by taxonomy (sign columns -/+):")
    for tax, neg, pos in taxonomy_cells(6):
        if not neg and not pos:
            continue
        left = ", ".join(format_word(w) for w in neg) or "-"
        right = ", ".join(format_word(w) for w in pos) or "-"
        print(f"  {tax.label():<12} {left:<55} | {right}")

    phi = sum(
        len(neg) + len(pos) for _, neg, pos in taxonomy_cells(6)
    )
    print(f"\n  ...{phi} nontrivial actions on N_6 in total.")


if __name__ == "__main__":
    main()
