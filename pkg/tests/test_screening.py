import random
from dataclasses import replace

from chainsel.elicitation import Constraint, Threshold, UserRequirements
from chainsel.screening import screen

from conftest import random_constraint, random_requirements


def test_bigbox_partition(kb, bigbox):
    qualified, reports = screen(kb, bigbox)
    assert [a.id for a in qualified] == ["ethereum_pow", "ethereum_poa", "corda"]
    assert {r.alternative_id for r in reports} == {"bitcoin", "hyperledger_fabric"}


def test_bigbox_violations_are_all_collected(kb, bigbox):
    _, reports = screen(kb, bigbox)
    by_id = {r.alternative_id: r for r in reports}
    bitcoin = by_id["bitcoin"]
    assert {v.criterion_id for v in bitcoin.violations} == {
        "smart_contracts",
        "storage_element",
    }
    fabric = by_id["hyperledger_fabric"]
    assert [v.criterion_id for v in fabric.violations] == ["bft_tolerance"]
    assert fabric.violations[0].actual_encoded == 0.0


def test_percent_tolerance_lets_near_misses_pass(kb, bigbox):
    # corda stores one-third as 0.33, the requirement says 0.3333
    qualified, _ = screen(kb, bigbox)
    assert "corda" in [a.id for a in qualified]
    strict = replace(bigbox, tolerance_pct=0.0)
    qualified, reports = screen(kb, strict)
    assert "corda" not in [a.id for a in qualified]
    corda = next(r for r in reports if r.alternative_id == "corda")
    assert [v.criterion_id for v in corda.violations] == ["bft_tolerance"]


def test_tolerance_does_not_apply_to_plain_numbers(kb):
    req = UserRequirements(
        constraints=(
            Constraint("throughput", "required", Threshold("at_least", value=1000.5)),
        ),
        tolerance_pct=0.005,
    )
    qualified, _ = screen(kb, req)
    assert qualified == []  # fabric's 1000 tx/s misses by half a transaction


def test_throughput_requirement_from_catalog(kb):
    req = UserRequirements(
        constraints=(
            Constraint("throughput", "required", Threshold("at_least", value=500.0)),
        ),
    )
    qualified, _ = screen(kb, req)
    assert [a.id for a in qualified] == ["hyperledger_fabric", "corda"]


def test_undesirable_boolean(kb):
    req = UserRequirements(
        constraints=(Constraint("cryptocurrency", "undesirable"),),
    )
    qualified, reports = screen(kb, req)
    assert [a.id for a in qualified] == ["hyperledger_fabric", "corda"]
    assert all(
        v.constraint.mode == "undesirable" for r in reports for v in r.violations
    )


def test_at_most_relation(kb):
    req = UserRequirements(
        constraints=(Constraint("latency", "required", Threshold("at_most", value=10.0)),),
    )
    qualified, _ = screen(kb, req)
    assert [a.id for a in qualified] == ["ethereum_poa", "hyperledger_fabric", "corda"]


def test_no_constraints_qualifies_everyone(kb):
    qualified, reports = screen(kb, UserRequirements())
    assert [a.id for a in qualified] == [a.id for a in kb.alternatives]
    assert reports == []


def test_randomized_screening_properties(kb):
    rng = random.Random(20138)
    all_ids = [a.id for a in kb.alternatives]
    for _ in range(100):
        req = random_requirements(rng, kb)
        qualified, reports = screen(kb, req)
        q_ids = [a.id for a in qualified]
        d_ids = [r.alternative_id for r in reports]

        # partition: every alternative lands on exactly one side, KB order kept
        assert sorted(q_ids + d_ids) == sorted(all_ids)
        assert not set(q_ids) & set(d_ids)
        assert q_ids == [a for a in all_ids if a in set(q_ids)]

        # anti-monotonicity: one more constraint never rescues anyone
        free = [c for c in kb.criterion_ids if req.constraint_for(c) is None]
        if free:
            extra = random_constraint(rng, kb, rng.choice(free))
            tightened = replace(req, constraints=req.constraints + (extra,))
            q2, _ = screen(kb, tightened)
            assert set(a.id for a in q2) <= set(q_ids)

        # preferences play no part in screening
        reshuffled = replace(
            req,
            preferences={cid: float(rng.randint(0, 4)) for cid in kb.criterion_ids},
        )
        q3, d3 = screen(kb, reshuffled)
        assert [a.id for a in q3] == q_ids
        assert [r.alternative_id for r in d3] == d_ids
