import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from csmcheck.core.exceptions import (
    DimensionShiftError,
    InputValidationError,
    MissingClassMapError,
    RangeError,
)
from csmcheck.models.report import CheckStatus
from csmcheck.models.ring import RingModel
from csmcheck.models.strat import (
    ConstructibleFn,
    EulerTable,
    FiniteStratMap,
    SmoothMapDatum,
    StratSpace,
    Stratum,
)
from csmcheck.services import constructible_service, ring_service


@st.composite
def stratified_spaces(draw, max_strata=8):
    """Random posets with a unitriangular Euler table."""
    count = draw(st.integers(1, max_strata))
    strata = [
        Stratum(name=f"s{i}", dim=draw(st.integers(0, 4)), chi_c=draw(st.integers(-3, 3)))
        for i in range(count)
    ]
    closure_of = {}
    for s in strata:
        higher = [t.name for t in strata if t.dim > s.dim]
        closure_of[s.name] = draw(st.lists(st.sampled_from(higher), unique=True)) if higher else []
    shape = StratSpace.from_covers(strata, closure_of)
    euler_rows = {
        t: {s: 1 if s == t else draw(st.integers(-3, 3)) for s in shape.below[t]} for t in shape.names
    }
    return StratSpace.from_covers(strata, closure_of, euler_rows=euler_rows)


@st.composite
def functions_on(draw, space):
    return ConstructibleFn(
        space=space, values={name: draw(st.integers(-5, 5)) for name in space.names}
    )


@st.composite
def spaces_with_function(draw):
    space = draw(stratified_spaces())
    return draw(functions_on(space))


def line_space():
    return StratSpace.from_covers(
        [Stratum(name="pt", dim=0, chi_c=1), Stratum(name="C", dim=1, chi_c=1)],
        {"pt": ["C"]},
    )


def point_space(name="pt"):
    return StratSpace.from_covers([Stratum(name=name, dim=0, chi_c=1)], {})


@settings(max_examples=500, deadline=None)
@given(spaces_with_function())
def test_basis_change_round_trip(phi):
    cc = constructible_service.to_cc_coefficients(phi)

    assert constructible_service.reconstruct(cc).values == phi.values


def test_two_stratum_line():
    space = line_space()
    phi = ConstructibleFn.from_partial(space, {"C": -1})

    cc = constructible_service.to_cc_coefficients(phi)

    assert cc.coeffs == {"C": 1, "pt": 1}
    assert constructible_service.is_effective_cc(cc)


def test_zero_function_has_empty_cycle():
    cc = constructible_service.to_cc_coefficients(ConstructibleFn.from_partial(line_space(), {}))

    assert cc.is_empty()
    assert not constructible_service.is_effective_cc(cc)


def test_euler_obstruction_is_a_basis_vector():
    space = line_space()

    cc = constructible_service.to_cc_coefficients(constructible_service.euler_obstruction(space, "C"))

    assert cc.coeffs == {"C": -1}


def test_cuspidal_cubic(sample_space):
    space, functions = sample_space("cuspidal_cubic")
    p2 = space.ring

    cc = constructible_service.to_cc_coefficients(functions["minus_one_U"])
    signed = constructible_service.signed_ssm_of(functions["minus_one_U"])
    csm = constructible_service.class_of(functions["one_Z"])
    segre = constructible_service.signed_segre_mather(space, "C")

    assert cc.coeffs == {"C": 1, "p": 2}
    assert signed == ring_service.from_polynomial(p2, [0, 3, 8])
    assert csm == ring_service.from_polynomial(p2, [0, 3, 2])
    assert ring_service.degree_of(csm) == 2
    assert segre == ring_service.from_polynomial(p2, [0, 3, 6])


def test_signed_classes_of_cuspidal_cubic(sample_space):
    space, functions = sample_space("cuspidal_cubic")
    p2 = space.ring
    phi = functions["minus_one_U"]

    signed = constructible_service.signed_class_of(phi)

    # c_*(-1_U) = -3[P^1] - [pt]
    assert constructible_service.class_of(phi) == ring_service.from_polynomial(p2, [0, -3, -1])
    assert signed == ring_service.from_polynomial(p2, [0, 3, -1])
    assert constructible_service.signed_class_of(functions["one_Z"]) == ring_service.from_polynomial(p2, [0, -3, 2])
    # dim P^2 is even, so the sign twist is multiplicative here
    twisted_inverse = ring_service.check_signs(ring_service.invert_unit(ring_service.from_polynomial(p2, [1, 3, 3])))
    assert constructible_service.signed_ssm_of(phi) == ring_service.multiply(twisted_inverse, signed)


def test_decomposition_against_another_euler_table():
    space = line_space()
    phi = ConstructibleFn.from_partial(space, {"C": -1})
    euler = EulerTable(rows={"C": {"C": 1, "pt": 2}, "pt": {"pt": 1}})

    cc = constructible_service.to_cc_coefficients(phi, euler)

    assert cc.coeffs == {"C": 1, "pt": 2}
    assert constructible_service.to_cc_coefficients(phi).coeffs == {"C": 1, "pt": 1}
    assert constructible_service.reconstruct(cc, euler).values == phi.values


def test_other_euler_table_is_validated():
    phi = ConstructibleFn.from_partial(line_space(), {"C": -1})

    with pytest.raises(InputValidationError):
        constructible_service.to_cc_coefficients(phi, EulerTable(rows={"C": {"C": 1}}))
    with pytest.raises(InputValidationError):
        constructible_service.to_cc_coefficients(
            phi, EulerTable(rows={"C": {"C": 1}, "pt": {"pt": 1, "C": 3}})
        )


def test_cuspidal_cubic_positivity(sample_space):
    space, functions = sample_space("cuspidal_cubic")

    effective = {c.name: c for c in constructible_service.positivity_report(functions["minus_one_U"])}
    plain = {c.name: c for c in constructible_service.positivity_report(functions["one_Z"])}

    assert effective["cc_effective"].passed is True
    assert effective["signed_ssm_effective"].status == CheckStatus.PASSED
    assert effective["signed_segre_mather_effective"].status == CheckStatus.PASSED
    assert plain["cc_effective"].status == CheckStatus.OBSERVED
    assert plain["cc_effective"].passed is False
    assert plain["signed_ssm_effective"].status == CheckStatus.SKIPPED


@pytest.mark.parametrize(
    "sample, function",
    [
        ("cuspidal_cubic", "one_Z"),
        ("cuspidal_cubic", "minus_one_U"),
        ("cuspidal_cubic", "eu_Z"),
        ("p2_cells", "one"),
        ("p2_cells", "big_cell"),
        ("two_stratum_line", "one_C"),
        ("two_stratum_line", "minus_one_C"),
    ],
)
def test_degree_of_class_is_euler_characteristic(sample_space, sample, function):
    _, functions = sample_space(sample)
    phi = functions[function]

    degree = ring_service.degree_of(constructible_service.class_of(phi))

    assert degree == constructible_service.euler_characteristic(phi)


def test_p2_cells_give_the_tangent_class(sample_space):
    _, functions = sample_space("p2_cells")

    csm = constructible_service.class_of(functions["one"])

    assert csm == ring_service.from_polynomial(RingModel.projective(2), [1, 3, 3])
    assert constructible_service.ssm_of(functions["one"]) == ring_service.unit(csm.ring)


def test_class_needs_ambient_data(sample_space):
    _, functions = sample_space("p1_torus")

    with pytest.raises(MissingClassMapError):
        constructible_service.class_of(functions["one"])
    report = {c.name: c.status for c in constructible_service.positivity_report(functions["one_Cstar"])}
    assert report["signed_ssm_effective"] == CheckStatus.SKIPPED


def test_torus_euler_characteristic(sample_space):
    _, functions = sample_space("p1_torus")

    assert constructible_service.euler_characteristic(functions["one"]) == 2
    assert constructible_service.euler_characteristic(functions["one_Cstar"]) == 0


@settings(max_examples=100, deadline=None)
@given(spaces_with_function(), spaces_with_function())
def test_box_product_multiplies_coefficients(phi, psi):
    product = constructible_service.box_product(phi, psi)

    cc = constructible_service.to_cc_coefficients(product)
    left = constructible_service.to_cc_coefficients(phi)
    right = constructible_service.to_cc_coefficients(psi)

    for y in phi.space.names:
        for z in psi.space.names:
            assert cc.coefficient(f"{y}×{z}") == left.coefficient(y) * right.coefficient(z)


def test_box_product_keeps_effectivity():
    space = line_space()
    phi = ConstructibleFn.from_partial(space, {"C": -1})

    product = constructible_service.box_product(phi, phi)

    assert constructible_service.is_effective_cc(constructible_service.to_cc_coefficients(product))
    assert constructible_service.euler_characteristic(product) == 1


def test_finite_pushforward_sums_over_fibers():
    target = point_space()
    source = StratSpace.from_covers(
        [Stratum(name="a", dim=0, chi_c=1), Stratum(name="b", dim=0, chi_c=1)], {}
    )
    f = FiniteStratMap(source=source, target=target, assignment={"a": "pt", "b": "pt"}, degrees={"a": 1, "b": 1})
    phi = ConstructibleFn.from_partial(source, {"a": 1, "b": 3})

    pushed = constructible_service.finite_pushforward(f, phi)

    assert pushed.values == {"pt": 4}
    assert f.chi_compatible
    assert constructible_service.euler_characteristic(pushed) == constructible_service.euler_characteristic(phi)


def test_degree_two_self_map_of_a_point():
    space = point_space()
    f = FiniteStratMap(source=space, target=space, assignment={"pt": "pt"}, degrees={"pt": 2})

    pushed = constructible_service.finite_pushforward(f, ConstructibleFn.from_partial(space, {"pt": 1}))

    assert pushed.values == {"pt": 2}
    assert not f.chi_compatible


def test_double_cover_of_torus_preserves_euler_characteristic():
    torus = StratSpace.from_covers([Stratum(name="T", dim=1, chi_c=0)], {})
    cover = StratSpace.from_covers([Stratum(name="T2", dim=1, chi_c=0)], {})
    f = FiniteStratMap(source=cover, target=torus, assignment={"T2": "T"}, degrees={"T2": 2})
    phi = ConstructibleFn.from_partial(cover, {"T2": -1})

    pushed = constructible_service.finite_pushforward(f, phi)

    assert f.chi_compatible
    assert constructible_service.euler_characteristic(pushed) == 0
    assert constructible_service.is_effective_cc(constructible_service.to_cc_coefficients(pushed))


def test_finite_map_must_preserve_dimension():
    f = FiniteStratMap(
        source=line_space(), target=line_space(), assignment={"pt": "C", "C": "C"}, degrees={"pt": 1, "C": 1}
    )

    with pytest.raises(DimensionShiftError):
        constructible_service.finite_pushforward(f, ConstructibleFn.from_partial(f.source, {}))


def test_finite_map_degrees_positive():
    with pytest.raises(ValueError):
        FiniteStratMap(source=point_space(), target=point_space(), assignment={"pt": "pt"}, degrees={"pt": 0})


@st.composite
def compatible_finite_maps(draw):
    """Finite maps whose source strata satisfy chi_c(s) = deg(s) chi_c(f(s))."""
    target = draw(stratified_spaces(max_strata=6))
    fibers = {t: draw(st.lists(st.integers(1, 3), min_size=1, max_size=2)) for t in target.names}
    strata, assignment, degrees = [], {}, {}
    for t, fiber in fibers.items():
        for i, d in enumerate(fiber):
            name = f"{t}.{i}"
            strata.append(Stratum(name=name, dim=target.dim_of(t), chi_c=d * target.chi_c(t)))
            assignment[name] = t
            degrees[name] = d
    closure_of = {
        s: [other for other, u in assignment.items() if u != t and target.leq(t, u)]
        for s, t in assignment.items()
    }
    source = StratSpace.from_covers(strata, closure_of)
    return FiniteStratMap(source=source, target=target, assignment=assignment, degrees=degrees)


@settings(max_examples=200, deadline=None)
@given(compatible_finite_maps(), st.data())
def test_finite_pushforward_preserves_euler_characteristic(f, data):
    phi = data.draw(functions_on(f.source))

    pushed = constructible_service.finite_pushforward(f, phi)

    assert f.chi_compatible
    assert constructible_service.euler_characteristic(pushed) == constructible_service.euler_characteristic(phi)


@settings(max_examples=100, deadline=None)
@given(spaces_with_function(), st.integers(0, 3))
def test_smooth_pullback_along_projection(phi, d):
    fiber = StratSpace.from_covers([Stratum(name="F", dim=d, chi_c=1)], {})
    f = constructible_service.product_projection(phi.space, fiber)

    pulled = constructible_service.smooth_pullback(f, d, phi)

    cc = constructible_service.to_cc_coefficients(phi)
    pulled_cc = constructible_service.to_cc_coefficients(pulled)
    for y in phi.space.names:
        assert pulled_cc.coefficient(f"{y}×F") == cc.coefficient(y)


def test_smooth_pullback_rejects_wrong_shift():
    space = line_space()
    datum = SmoothMapDatum(source=space, target=space, assignment={"pt": "pt", "C": "C"})

    with pytest.raises(DimensionShiftError):
        constructible_service.smooth_pullback(datum, 1, ConstructibleFn.from_partial(space, {}))


def test_smooth_pullback_rejects_order_reversal():
    source = StratSpace.from_covers(
        [Stratum(name="a", dim=0, chi_c=1), Stratum(name="b", dim=1, chi_c=1)], {"a": ["b"]}
    )
    target = StratSpace.from_covers(
        [Stratum(name="x", dim=0, chi_c=1), Stratum(name="y", dim=1, chi_c=1)], {}
    )
    datum = SmoothMapDatum(source=source, target=target, assignment={"a": "x", "b": "y"})

    with pytest.raises(InputValidationError):
        constructible_service.validate_smooth_datum(datum, 0)


@settings(max_examples=200, deadline=None)
@given(stratified_spaces(), st.data())
def test_behrend_coefficients_are_multiplicities(space, data):
    supports = data.draw(st.lists(st.sampled_from(space.names), min_size=1, unique=True))
    components = [(y, data.draw(st.integers(1, 6))) for y in supports]

    nu = constructible_service.behrend_function(space, components)
    cc = constructible_service.to_cc_coefficients(nu)

    assert cc.coeffs == dict(components)
    assert constructible_service.is_effective_cc(cc)


def test_behrend_on_two_stratum_line():
    space = line_space()

    nu = constructible_service.behrend_function(space, [("pt", 2), ("C", 3)])

    assert nu.values == {"pt": -1, "C": -3}
    assert constructible_service.virtual_euler_characteristic(space, [("pt", 2), ("C", 3)]) == -4


def test_behrend_rejects_bad_components():
    space = line_space()

    with pytest.raises(RangeError):
        constructible_service.behrend_function(space, [("C", 0)])
    with pytest.raises(InputValidationError):
        constructible_service.behrend_function(space, [("C", 1), ("C", 2)])
    with pytest.raises(InputValidationError):
        constructible_service.behrend_function(space, [("D", 1)])
    with pytest.raises(InputValidationError):
        constructible_service.behrend_function(space, [])


def test_indicator_and_combine():
    space = line_space()

    one = constructible_service.closure_indicator(space, "C")
    difference = constructible_service.combine(space, [(1, one), (-1, constructible_service.indicator(space, ["pt"]))])

    assert one.values == {"pt": 1, "C": 1}
    assert difference.values == {"pt": 0, "C": 1}


def test_from_covers_rejects_cycles_and_unknown_names():
    a = Stratum(name="a", dim=0, chi_c=1)
    b = Stratum(name="b", dim=1, chi_c=1)

    with pytest.raises(InputValidationError):
        StratSpace.from_covers([a, b], {"a": ["b"], "b": ["a"]})
    with pytest.raises(InputValidationError):
        StratSpace.from_covers([a], {"a": ["z"]})


def test_euler_table_needs_unit_diagonal():
    a = Stratum(name="a", dim=0, chi_c=1)
    b = Stratum(name="b", dim=1, chi_c=1)

    with pytest.raises(ValueError):
        StratSpace.from_covers([a, b], {"a": ["b"]}, euler_rows={"b": {"b": 2}})
