from hypothesis import strategies as st

from hsboundary.lattice import make_weight


@st.composite
def dominant_pairs(draw, d, k_max=10):
    pairs = []
    for _ in range(d):
        a = draw(st.integers(0, k_max))
        b = draw(st.integers(0, a))
        pairs.append((a, b))
    return pairs


@st.composite
def weights(draw, max_d=3, k_max=10, shift_c=True):
    d = draw(st.integers(1, max_d))
    pairs = draw(dominant_pairs(d, k_max))
    k1 = [a for a, _ in pairs]
    k2 = [b for _, b in pairs]
    c = sum(k1) + sum(k2)
    if shift_c:
        c += 2 * draw(st.integers(-5, 5))
    return make_weight(k1, k2, c)


@st.composite
def parallel_weights(draw, max_d=3, k_max=8):
    """Weights with k1 and k2 both constant."""
    d = draw(st.integers(1, max_d))
    a = draw(st.integers(0, k_max))
    b = draw(st.integers(0, a))
    return make_weight([a] * d, [b] * d)
