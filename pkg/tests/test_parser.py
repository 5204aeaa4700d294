import pytest
from hypothesis import given, strategies as st

from equigrass.invariants import class_c, class_w, class_w_e, class_wc
from equigrass.m2 import RHO, TAU
from equigrass.parser import (ClassRef, EvalError, ParseError, Power, Product, Sum, evaluate,
                              evaluate_text, parse_expression)


def test_product_node():
    tree = parse_expression("w_1 * w_1")
    assert isinstance(tree, Product)
    assert tree.factors == (ClassRef("w", (1,), 0), ClassRef("w", (1,), 6))


def test_sum_of_product_and_class():
    tree = parse_expression("tau * wc_{1,1} + w_3")
    assert isinstance(tree, Sum)
    assert isinstance(tree.terms[0], Product)
    assert tree.terms[1] == ClassRef("w", (3,), 17)


def test_unterminated_generalized_class():
    with pytest.raises(ParseError) as exc:
        parse_expression("w_1^(")
    assert exc.value.offset == 5


@pytest.mark.parametrize("src, offset", [
    ("", 0), ("w_", 2), ("w_1 +", 5), ("wc_{1,}", 6), ("(w_1", 4), ("w_1 w_2", 4),
    ("c_{2", 4), ("w_1 ** 2", 5), ("ρ + w_1", 0), ("w_1 + ρ", 6),
])
def test_error_offsets(src, offset):
    with pytest.raises(ParseError) as exc:
        parse_expression(src)
    assert exc.value.offset == offset


def test_precedence():
    k = 3
    assert evaluate_text("w_1 + w_2 * c_1", k) == class_w(1, k) + class_w(2, k) * class_c(1, k)
    assert evaluate_text("(w_1 + w_2) * c_1", k) == (class_w(1, k) + class_w(2, k)) * class_c(1, k)


def test_values():
    k = 4
    assert evaluate_text("w_1 * w_1", k) == class_w(1, k) * RHO + class_c(1, k) * TAU
    assert evaluate_text("tau * wc_{1,1} + w_3", k) == class_w(1, k) * class_w(2, k)
    assert evaluate_text("w_{2}^(1)", k) == class_w_e(2, 1, k)
    assert evaluate_text("c_1^3", k) == class_c(1, k) ** 3
    assert evaluate_text("wc_{2,1} * rho", k) == class_wc(2, 1, k) * RHO
    assert evaluate_text("1 + 1", k) == evaluate_text("0", k)


def test_power_versus_generalized_class():
    tree = parse_expression("w_1^(2)^2")
    assert isinstance(tree, Power) and tree.base == ClassRef("w", (1, 2), 0)


def test_range_errors():
    with pytest.raises(EvalError) as exc:
        evaluate_text("w_1 + w_5", 3)
    assert exc.value.offset == 6


names = st.sampled_from(["w_1", "w_2", "c_1", "c_2", "w_1^(1)", "wc_{1,1}", "rho", "tau", "1"])
exprs = st.recursive(names, lambda inner: st.one_of(
    st.tuples(inner, inner).map(lambda t: f"{t[0]} + {t[1]}"),
    st.tuples(inner, inner).map(lambda t: f"({t[0]}) * ({t[1]})"),
    st.tuples(inner, st.integers(0, 3)).map(lambda t: f"({t[0]})^{t[1]}")), max_leaves=6)


@given(exprs)
def test_render_reparses_to_same_value(src):
    tree = parse_expression(src)
    assert evaluate(parse_expression(tree.render()), 3) == evaluate(tree, 3)
