"""
Hypothesis strategies shared by the logic and semantics tests.
"""

from hypothesis import strategies as st

from app.models.logic import And, Atom, Bot, Iff, Implies, Not, Or, Top

p, q, r = Atom("p"), Atom("q"), Atom("r")

leaves = st.one_of(st.sampled_from([p, q, r]), st.just(Top()), st.just(Bot()))
sentences = st.recursive(
    leaves,
    lambda children: st.one_of(
        children.map(Not),
        st.builds(And, children, children),
        st.builds(Or, children, children),
        st.builds(Implies, children, children),
        st.builds(Iff, children, children),
    ),
    max_leaves=10,
)
