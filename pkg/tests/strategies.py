from hypothesis import strategies as st

from helixspan.diagram import SecondaryStructure, parse_dot_bracket


@st.composite
def dot_brackets(draw, min_size: int = 1, max_size: int = 40) -> str:
    """Valid dot-bracket strings, drawn one feasible character at a time."""
    n = draw(st.integers(min_size, max_size))
    chars: list[str] = []
    opens: list[int] = []
    for pos in range(n):
        remaining = n - pos - 1
        options = []
        if remaining >= len(opens) + 2:
            options.append("(")
        if opens and opens[-1] < pos - 1:
            options.append(")")
        if remaining >= len(opens):
            options.append(".")
        ch = draw(st.sampled_from(options))
        if ch == "(":
            opens.append(pos)
        elif ch == ")":
            opens.pop()
        chars.append(ch)
    return "".join(chars)


def structures(min_size: int = 1, max_size: int = 40) -> st.SearchStrategy[SecondaryStructure]:
    return dot_brackets(min_size, max_size).map(parse_dot_bracket)
