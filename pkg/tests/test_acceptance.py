"""Acceptance suite: exact, exhaustive checks at desk scale.

One test per criterion; each prints a single pass/fail line.  Tolerances
are zero throughout: every comparison is exact integer or boolean
equality over fully enumerated domains or fixed seeded samples.
"""

import json
import random
import time
from itertools import product
from math import factorial

import numpy as np

from posetblock import (
    Alphabet,
    BlockMatrix,
    Labeling,
    Poset,
    SpaceContext,
    all_posets,
    check_weight_axioms,
    check_weight_axioms_bruteforce,
    enumerate_isometry_group,
    enumerate_linear_codes,
    hamming_min_distance,
    hamming_weight,
    identity_tail_map,
    in_triangular_group,
    induced_automorphism,
    is_r_perfect,
    lee_weight,
    mds_iff_perfect_check,
    min_distance,
    packing_radius,
    perfect_code_from_function,
    random_code,
    random_tail_map,
    singleton_params,
    space_context,
    verify_semidirect,
)
from posetblock.algebra import is_invertible_mod
from posetblock.cli import main
from posetblock.tables import (
    block_max_table,
    difference_rank_table,
    digit_table,
    support_mask_table,
    weight_table,
)

MAX_EXHAUSTIVE_SIZE = 4096
ALPHABETS = (2, 3, 4, 5)


def report(number: int, name: str, violations: list) -> None:
    status = "FAIL" if violations else "PASS"
    print(f"ACCEPTANCE {number} {name}: {status}")
    assert not violations, f"criterion {number} ({name}): {violations[:5]}"


def fixture_bundles():
    """All posets with s <= 4, labelings k_i <= 2 with n <= 5, both weights."""
    for s in (1, 2, 3, 4):
        for poset in all_posets(s):
            for k in product((1, 2), repeat=s):
                if sum(k) > 5:
                    continue
                for m in ALPHABETS:
                    alphabet = Alphabet(m)
                    for weight in (hamming_weight(alphabet), lee_weight(alphabet)):
                        yield SpaceContext(poset, Labeling(k), alphabet, weight)


def semidirect_fixtures():
    return [
        ("chain 1<2, k=(1,1), m=2, Hamming", space_context(Poset.chain(2), (1, 1), 2), 2),
        ("antichain [2], k=(1,1), m=3, Hamming", space_context(Poset.antichain(2), (1, 1), 3), 8),
        ("s=1, k=(2), m=2, Hamming", space_context(Poset.chain(1), (2,), 2), 6),
        (
            "s=1, k=(1), m=5, Lee",
            space_context(Poset.chain(1), (1,), 5, lee_weight(Alphabet(5))),
            2,
        ),
        (
            "vee covers (1,3),(2,3), k=(1,1,1), m=2, Hamming",
            space_context(Poset.from_covers(3, [(1, 3), (2, 3)]), (1, 1, 1), 2),
            None,
        ),
    ]


def chain_fixtures():
    return [
        space_context(Poset.chain(2), (1, 1), 2),
        space_context(Poset.chain(2), (1, 1), 3),
        space_context(Poset.chain(3), (1, 2, 1), 2),
        space_context(Poset.chain(2), (2, 1), 4, lee_weight(Alphabet(4))),
        space_context(Poset.chain(2), (1, 1), 5, lee_weight(Alphabet(5))),
    ]


def test_criterion_1_weight_axiom_suite():
    started = time.monotonic()
    violations = []
    checked = 0
    for ctx in fixture_bundles():
        if ctx.size > MAX_EXHAUSTIVE_SIZE:
            continue
        result = check_weight_axioms(ctx)
        if not result.ok:
            violations.append((ctx.poset.covers(), ctx.labeling.k, ctx.m, result))
        checked += 1
        # periodic cross-validation against the direct pairwise enumeration
        if checked % 181 == 0 and ctx.size <= 512:
            brute = check_weight_axioms_bruteforce(ctx)
            if brute.ok != result.ok:
                violations.append(("bruteforce disagrees", ctx.poset.covers(), ctx.m))
    assert checked == 9936
    elapsed = time.monotonic() - started
    if elapsed >= 60:
        violations.append(("runtime target missed", elapsed))
    report(1, "weight-axiom suite", violations)


def test_criterion_2_reduction_suite():
    violations = []
    for ctx in fixture_bundles():
        weights = weight_table(ctx)
        digits = digit_table(ctx)
        supports = support_mask_table(ctx, digits)
        is_hamming = ctx.weight_fn.table == hamming_weight(ctx.alphabet).table
        is_lee = ctx.weight_fn.table == lee_weight(ctx.alphabet).table

        if is_hamming:
            ideal_size = np.array(
                [ctx.poset.ideal_mask(mask).bit_count() for mask in range(1 << ctx.s)]
            )
            if not (weights == ideal_size[supports]).all():
                violations.append(("hamming ideal size", ctx.poset.covers(), ctx.labeling.k, ctx.m))
            if ctx.poset.is_antichain and set(ctx.labeling.k) == {1}:
                classical = (digits != 0).sum(axis=1)
                if not (weights == classical).all():
                    violations.append(("classical hamming", ctx.poset.covers(), ctx.m))

        if is_lee:
            if ctx.max_weight != ctx.m // 2:
                violations.append(("lee max weight", ctx.m))
            expansion = _maximal_plus_floor_expansion(ctx, digits, supports)
            if not (weights == expansion).all():
                violations.append(("lee expansion", ctx.poset.covers(), ctx.labeling.k, ctx.m))
    report(2, "reduction suite", violations)


def _maximal_plus_floor_expansion(ctx, digits, supports):
    """Recompute weights as maximal block maxima plus floor(m/2) per lower ideal member."""
    block_max = block_max_table(ctx, digits)
    expansion = np.zeros(len(digits), dtype=np.int64)
    for mask in range(1 << ctx.s):
        members = np.nonzero(supports == mask)[0]
        if len(members) == 0:
            continue
        elems = {i + 1 for i in range(ctx.s) if mask >> i & 1}
        ideal = ctx.poset.ideal_of(elems)
        maximals = ctx.poset.maximal_elements(ideal)
        total = np.zeros(len(members), dtype=np.int64)
        for i in maximals:
            total += block_max[members, i - 1]
        total += (ctx.m // 2) * (len(ideal) - len(maximals))
        expansion[members] = total
    return expansion


def test_criterion_3_semidirect_product():
    started = time.monotonic()
    violations = []
    for name, ctx, expected_gl in semidirect_fixtures():
        rep = verify_semidirect(ctx)
        expected = rep.u_order * 2 if expected_gl is None else expected_gl
        if rep.gl_order != expected:
            violations.append((name, "gl_order", rep.gl_order, expected))
        if not rep.product_matches or not rep.all_decomposed:
            violations.append((name, "factorization", rep))
        if rep.gl_order != rep.u_order * rep.aut_order:
            violations.append((name, "order product", rep))

        if ctx.m ** (ctx.n * ctx.n) <= 1 << 20:
            pruned = enumerate_isometry_group(ctx)
            exhaustive = enumerate_isometry_group(ctx, exhaustive=True)
            if [t.rows for t in pruned] != [t.rows for t in exhaustive]:
                violations.append((name, "pruned vs exhaustive"))

        group = enumerate_isometry_group(ctx)
        for T in group:
            eta = induced_automorphism(T)
            for i in ctx.poset.elements:
                target_ideal = ctx.poset.principal_ideal(eta(i))[0]
                for v in _nonzero_block_vectors(ctx, i):
                    if ctx.poset.ideal_of(T.apply(v).support()) != target_ideal:
                        violations.append((name, "principal ideal", T.rows, i))
                        break
                if ctx.labeling.k[i - 1] != ctx.labeling.k[eta(i) - 1]:
                    violations.append((name, "dimension", T.rows, i))
                if len(ctx.poset.principal_ideal(i)[0]) != len(target_ideal):
                    violations.append((name, "ideal cardinality", T.rows, i))
            for i in ctx.poset.elements:
                for j in ctx.poset.elements:
                    if ctx.poset.leq(i, j) and not ctx.poset.leq(eta(i), eta(j)):
                        violations.append((name, "order preservation", T.rows, (i, j)))
    elapsed = time.monotonic() - started
    if elapsed >= 120:
        violations.append(("runtime target missed", elapsed))
    report(3, "semidirect product", violations)


def _nonzero_block_vectors(ctx, i):
    k = ctx.labeling.k[i - 1]
    offset = ctx.offsets[i - 1]
    for blk in product(range(ctx.m), repeat=k):
        if any(blk):
            coords = [0] * ctx.n
            coords[offset : offset + k] = blk
            yield ctx.vector(coords)


def test_criterion_4_example_specializations():
    violations = []
    # Hamming: triangular membership must equal shape plus invertible diagonal
    hamming_spaces = [
        ctx for _, ctx, _ in semidirect_fixtures()
        if ctx.weight_fn.table == hamming_weight(ctx.alphabet).table
    ]
    for ctx in hamming_spaces:
        for entries in product(range(ctx.m), repeat=ctx.n * ctx.n):
            T = BlockMatrix(
                ctx, tuple(entries[r * ctx.n : (r + 1) * ctx.n] for r in range(ctx.n))
            )
            shape_ok = all(
                not any(any(row) for row in T.block(i, j))
                for i in ctx.poset.elements
                for j in ctx.poset.elements
                if not ctx.poset.leq(i, j)
            )
            diag_ok = all(
                is_invertible_mod(T.block(r, r), ctx.m) for r in ctx.poset.elements
            )
            if in_triangular_group(T) != (shape_ok and diag_ok):
                violations.append(("triangular vs invertible", ctx.m, T.rows))

    # antichains: group order is the per-block product times label symmetries
    antichain_spaces = [
        space_context(Poset.antichain(2), (1, 1), 3),
        space_context(Poset.antichain(2), (1, 2), 2),
        space_context(Poset.antichain(3), (1, 1, 1), 2),
        space_context(Poset.antichain(2), (1, 1), 4, lee_weight(Alphabet(4))),
    ]
    for ctx in antichain_spaces:
        per_block = 1
        for k in ctx.labeling.k:
            block = space_context(Poset.chain(1), (k,), ctx.m, ctx.weight_fn)
            per_block *= len(enumerate_isometry_group(block))
        counts: dict[int, int] = {}
        for k in ctx.labeling.k:
            counts[k] = counts.get(k, 0) + 1
        symmetries = 1
        for c in counts.values():
            symmetries *= factorial(c)
        if len(enumerate_isometry_group(ctx)) != per_block * symmetries:
            violations.append(("antichain product", ctx.labeling.k, ctx.m))
    report(4, "example specializations", violations)


def test_criterion_5_singleton_mds_perfect_suite():
    violations = []
    rng = random.Random(2024)

    # Singleton bound on 1000 seeded random codes per fixture space
    for name, ctx, _ in semidirect_fixtures():
        for _ in range(1000):
            code = random_code(ctx, rng.randint(2, min(12, ctx.size)), rng)
            if code.size > singleton_params(code).bound:
                violations.append(("singleton violated", name, code.coords_list()))

    # chain graph codes are (t * max_weight)-perfect for identity and random maps
    for ctx in chain_fixtures():
        for t in range(ctx.s + 1):
            tables = [identity_tail_map(ctx, t)]
            tables += [random_tail_map(ctx, t, rng) for _ in range(100)]
            seen = set()
            for table in tables:
                key = tuple(sorted(table.items()))
                if key in seen:
                    continue
                seen.add(key)
                code = perfect_code_from_function(ctx, t, table)
                if not is_r_perfect(code, t * ctx.max_weight):
                    violations.append(("graph code not perfect", ctx.labeling.k, ctx.m, t))

    # full subspace enumeration of the two smallest chain spaces
    applicable_seen = 0
    for m in (2, 3):
        ctx = space_context(Poset.chain(2), (1, 1), m)
        for code in enumerate_linear_codes(ctx):
            if code.size < 2:
                continue
            check = mds_iff_perfect_check(code)
            if check.applicable:
                applicable_seen += 1
                if not check.consistent:
                    violations.append(("mds/perfect mismatch", m, code.coords_list()))
    if applicable_seen == 0:
        violations.append(("no applicable linear code found",))
    report(5, "singleton/MDS/perfect suite", violations)


_FIXTURE_CODE_CACHE: dict = {}


def chain_fixture_codes(ctx, seed):
    """All linear codes of the tiny fixtures plus 50 seeded random codes."""
    key = (ctx, seed)
    if key not in _FIXTURE_CODE_CACHE:
        rng = random.Random(seed)
        codes = []
        if ctx.size <= 32:
            codes += [c for c in enumerate_linear_codes(ctx) if c.size >= 2]
        codes += [random_code(ctx, rng.randint(2, min(8, ctx.size)), rng) for _ in range(50)]
        _FIXTURE_CODE_CACHE[key] = codes
    return _FIXTURE_CODE_CACHE[key]


def test_criterion_6_ball_containment_and_radius_bound():
    violations = []
    for ctx in chain_fixtures():
        weights = weight_table(ctx)
        hamming_weights = weight_table(ctx.hamming())
        digits = digit_table(ctx)
        max_w = ctx.max_weight

        # ball containment with equality exactly at full steps of max_weight
        for center_rank in range(ctx.size):
            center = ctx.vector_at(center_rank).coords
            diff = difference_rank_table(ctx, center, digits)
            dist_w = weights[diff]
            dist_h = hamming_weights[diff]
            for i in range(ctx.s):
                for l in range(1, max_w + 1):
                    r = l + i * max_w
                    inner = dist_w <= r
                    outer = dist_h <= i + 1
                    if (inner & ~outer).any():
                        violations.append(("ball not contained", ctx.labeling.k, ctx.m, r))
                    if (inner == outer).all() != (l == max_w):
                        violations.append(("ball equality", ctx.labeling.k, ctx.m, r))

        # radius lower bound, and equality whenever the distance condition holds
        for code in chain_fixture_codes(ctx, seed=99):
            rho = packing_radius(code)
            d_h = hamming_min_distance(code)
            d_w = min_distance(code)
            floor = max_w * (d_h - 1)
            if rho < floor:
                violations.append(("radius below bound", ctx.m, code.coords_list()))
            if d_w == ctx.min_nonzero_weight + (d_h - 1) * max_w and rho != floor:
                violations.append(("radius equality (if direction)", ctx.m, code.coords_list()))
    report(6, "ball containment and radius bound", violations)


def test_criterion_6_radius_equality_condition_as_stated():
    """Known-red: the stated biconditional fails in the only-if direction.

    Over Z_5 with the Lee weight, the code {0, 2} on a single block has
    packing radius 0 = max_weight * (d_H - 1) although d_w = 2 differs
    from min_weight + (d_H - 1) * max_weight = 1: radius-1 balls meet at
    1 = 0 + 1 = 2 - 1 because 2 splits as the difference of two weight-1
    elements.  The claim only survives when no element is a difference
    of two strictly lighter ones (e.g. any Hamming alphabet).
    """
    violations = []
    for ctx in chain_fixtures():
        max_w = ctx.max_weight
        for code in chain_fixture_codes(ctx, seed=99):
            rho = packing_radius(code)
            d_h = hamming_min_distance(code)
            d_w = min_distance(code)
            floor = max_w * (d_h - 1)
            if (rho == floor) != (d_w == ctx.min_nonzero_weight + (d_h - 1) * max_w):
                violations.append(("radius equality", ctx.m, code.coords_list()))
    report(6, "radius equality condition (as stated)", violations)


CLI_BUNDLE = {
    "poset.json": {"s": 2, "covers": [[1, 2]]},
    "labeling.json": {"k": [1, 1]},
    "alphabet.json": {"m": 2},
    "weight.json": {"builtin": "hamming"},
    "code.json": {"codewords": [[0, 0], [1, 1]]},
    "matrix.json": {"rows": [[1, 1], [0, 1]]},
    "vector.json": {"coords": [0, 1]},
    "vector2.json": {"coords": [1, 0]},
    "map.json": {"t": 1, "map": [{"tail": [0], "head": [0]}, {"tail": [1], "head": [1]}]},
}


def test_criterion_7_cli_determinism(tmp_path, capsys):
    for name, doc in CLI_BUNDLE.items():
        (tmp_path / name).write_text(json.dumps(doc), encoding="utf-8")
    base = [
        "--poset", str(tmp_path / "poset.json"),
        "--labeling", str(tmp_path / "labeling.json"),
        "--alphabet", str(tmp_path / "alphabet.json"),
        "--weight", str(tmp_path / "weight.json"),
    ]
    commands = [
        ["poset-info", *base],
        ["weigh", *base, "--vector", str(tmp_path / "vector.json")],
        ["distance", *base, "--vector", str(tmp_path / "vector.json"),
         "--vector2", str(tmp_path / "vector2.json")],
        ["ball", *base, "--center", str(tmp_path / "vector.json"), "--radius", "1", "--list"],
        ["code-report", *base, "--code", str(tmp_path / "code.json")],
        ["perfect-construct", *base, "--map", str(tmp_path / "map.json"), "--list"],
        ["perfect-construct", *base, "--t", "1", "--generate", "random", "--seed", "7"],
        ["isometry-check", *base, "--matrix", str(tmp_path / "matrix.json")],
        ["isometry-group", *base, "--list"],
        ["decompose", *base, "--matrix", str(tmp_path / "matrix.json")],
        ["validate", *base, "--code", str(tmp_path / "code.json")],
    ]
    violations = []
    for argv in commands:
        first_status = main(argv)
        first = capsys.readouterr().out
        second_status = main(argv)
        second = capsys.readouterr().out
        if first_status != 0 or second_status != 0:
            violations.append((argv[0], "nonzero exit", first_status, second_status))
        if first != second:
            violations.append((argv[0], "output drift"))
        try:
            json.loads(first)
        except json.JSONDecodeError:
            violations.append((argv[0], "invalid JSON"))
    report(7, "CLI determinism", violations)
