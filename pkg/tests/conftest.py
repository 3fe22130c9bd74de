import hypothesis.strategies as st

from ckwk import BOT, And, Box, Dia, Formula, Imp, Or, Var


def formulas(alphabet: tuple[str, ...] = ("p", "q", "r"), max_leaves: int = 6):
    atoms = st.sampled_from([BOT] + [Var(a) for a in alphabet])
    return st.recursive(
        atoms,
        lambda kids: st.one_of(
            st.builds(And, kids, kids),
            st.builds(Or, kids, kids),
            st.builds(Imp, kids, kids),
            st.builds(Box, kids),
            st.builds(Dia, kids),
        ),
        max_leaves=max_leaves,
    )


def small_formulas(alphabet: tuple[str, ...] = ("p", "q")):
    return formulas(alphabet, max_leaves=3)
