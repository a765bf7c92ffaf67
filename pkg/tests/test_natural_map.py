import pytest

from lemspec.errors import EmptySpectrum
from lemspec.instances import (
    ExplicitModuleSpec,
    InstanceDescriptor,
    ZnSpec,
    build_instance,
    find_descriptor,
)
from lemspec.natural_map import (
    build_natural_map,
    component_minimal_prime_bijection,
    connectedness_equivalence,
    continuity_check,
    dr_preimage_check,
    finite_spec_criterion,
    homeomorphism_check,
    image_closed_criterion,
    injectivity_battery,
    is_multiplication_le_module,
    multiplication_spectral_check,
    spectral_battery,
    surjectivity_and_openclosed,
)

NON_MULT = {"Z2xZ2-over-Z2-submodules", "Z2xZ4-over-Z4-submodules"}

DEGENERATE = InstanceDescriptor(
    name="point-over-Z2",
    ring=ZnSpec(2),
    module=ExplicitModuleSpec(
        size=1, zero=0, leq=((1,),), add=((0,),), action=((0,), (0,))
    ),
)


def test_psi_table_z6(z6_module):
    nm = build_natural_map(z6_module)
    assert not nm.degenerate
    assert nm.annihilator_ideal.sorted_members() == (0,)
    assert nm.quotient.order == 6
    assert nm.image_of(1).sorted_members() == (0, 3)
    assert nm.image_of(2).sorted_members() == (0, 2, 4)
    with pytest.raises(KeyError):
        nm.image_of(0)


def test_preimage_z6(z6_module):
    nm = build_natural_map(z6_module)
    img1 = nm.image_of(1)
    assert nm.preimage(frozenset({img1})) == frozenset({1})
    assert nm.preimage(frozenset()) == frozenset()


def test_injectivity_battery_z6(z6_module):
    report = injectivity_battery(build_natural_map(z6_module))
    assert report.names == (
        "psi-injective",
        "vstar-separated",
        "colon-fibers-at-most-one",
    )
    assert report.values == (True, True, True)
    assert report.equivalent and report.all_true


def test_injectivity_battery_klein(klein_module):
    report = injectivity_battery(build_natural_map(klein_module))
    assert report.values == (False, False, False)
    assert report.equivalent and not report.all_true


def test_continuity_everywhere(all_instances):
    for mod in all_instances:
        assert continuity_check(build_natural_map(mod)), mod.name


def test_dr_preimages(z6_module, klein_module):
    for mod in (z6_module, klein_module):
        nm = build_natural_map(mod)
        for r in range(mod.ring.order):
            assert dr_preimage_check(nm, r), (mod.name, r)


def test_openclosed_everywhere(all_instances):
    for mod in all_instances:
        report = surjectivity_and_openclosed(build_natural_map(mod))
        assert report.surjective
        assert report.ok, mod.name


def test_connectedness_z4():
    mod = build_instance(find_descriptor("Z4-ideal-lattice"))
    report = connectedness_equivalence(build_natural_map(mod))
    assert report.hypothesis_met
    assert report.clauses.values == (True, True, True)
    assert report.ok


def test_connectedness_z6(z6_module):
    report = connectedness_equivalence(build_natural_map(z6_module))
    assert report.hypothesis_met
    assert report.clauses.values == (False, False, False)
    assert report.clauses.equivalent
    assert report.ok


def test_connectedness_everywhere(all_instances):
    for mod in all_instances:
        assert connectedness_equivalence(build_natural_map(mod)).ok, mod.name


def test_component_bijection_everywhere(all_instances):
    for mod in all_instances:
        assert component_minimal_prime_bijection(
            build_natural_map(mod)
        ), mod.name


def test_spectral_battery_z6(z6_module):
    report = spectral_battery(build_natural_map(z6_module))
    assert report.values == (True,) * 6
    assert report.equivalent


def test_spectral_battery_klein(klein_module):
    report = spectral_battery(build_natural_map(klein_module))
    assert report.values == (False,) * 6
    assert report.equivalent


def test_homeomorphism_check_everywhere(all_instances):
    for mod in all_instances:
        assert homeomorphism_check(build_natural_map(mod)), mod.name


def test_multiplication_flags(all_instances):
    for mod in all_instances:
        assert is_multiplication_le_module(mod) == (mod.name not in NON_MULT)


def test_multiplication_spectral(all_instances):
    for mod in all_instances:
        nm = build_natural_map(mod)
        if mod.name in NON_MULT:
            with pytest.raises(ValueError):
                multiplication_spectral_check(nm)
        else:
            assert multiplication_spectral_check(nm), mod.name


def test_image_closed_criterion(z6_module, klein_module):
    report = image_closed_criterion(build_natural_map(z6_module))
    assert report.image_closed and report.spectral and report.injective
    assert report.ok
    report = image_closed_criterion(build_natural_map(klein_module))
    assert report.image_closed
    assert not report.spectral and not report.injective
    assert report.ok


def test_finite_spec_criterion(all_instances):
    for mod in all_instances:
        assert finite_spec_criterion(mod), mod.name


def test_degenerate_map():
    mod = build_instance(DEGENERATE)
    nm = build_natural_map(mod)
    assert nm.degenerate
    assert nm.images() == ()
    assert not nm.is_surjective()
    with pytest.raises(ValueError):
        continuity_check(nm)
    with pytest.raises(EmptySpectrum):
        finite_spec_criterion(mod)
