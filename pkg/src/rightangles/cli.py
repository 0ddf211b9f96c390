"""Command-line front end.

Commands: bounds, verify, certify, construct, search, rankcheck.  Exit codes
are stable: 0 for success (verify: the set is free), 1 when verify finds a
right angle or certify finds a certificate refutation, 2 for usage and parse
errors.  All randomness flows from --seed and is echoed in the output.

The environment variable RIGHTANGLE_FIELD_TABLE may point to a JSON file
mapping field orders to {"p", "k", "modulus"} objects; it extends or
overrides the built-in modulus table and is itself re-validated on load.
"""

from __future__ import annotations

import csv
import io
import json
import os
import random
import time

import click

from . import errors, geometry, rank, search, serial
from .gf import FieldSpec, default_field, factor_prime_power, make_field

FIELD_TABLE_ENV = "RIGHTANGLE_FIELD_TABLE"


def resolve_field(q: int, modulus: str | None) -> FieldSpec:
    """Field for --q, honoring --field-modulus and RIGHTANGLE_FIELD_TABLE."""
    p, k = factor_prime_power(q)
    if modulus is not None:
        coeffs = [int(c) for c in modulus.replace(" ", "").split(",") if c != ""]
        return make_field(p, k, coeffs)
    table_path = os.environ.get(FIELD_TABLE_ENV)
    if table_path:
        with open(table_path, "r", encoding="utf-8") as fh:
            table = json.load(fh)
        if str(q) in table:
            entry = table[str(q)]
            return make_field(int(entry["p"]), int(entry["k"]), entry["modulus"])
    return default_field(q)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        click.echo(text)


def _usage(e: Exception) -> click.UsageError:
    return click.UsageError(str(e))


@click.group()
@click.version_option(package_name="rightangles")
def main():
    """Right-angle-free sets over F_q^n: verify, certify, bound, search."""


format_option = click.option(
    "--format", "fmt", type=click.Choice(["text", "json"]), default="text",
    show_default=True, help="Output format.")
table_format_option = click.option(
    "--format", "fmt", type=click.Choice(["text", "json", "csv"]), default="text",
    show_default=True, help="Output format.")
out_option = click.option("--out", type=click.Path(), default=None,
                          help="Write output to this file instead of stdout.")
modulus_option = click.option(
    "--field-modulus", default=None,
    help="Override modulus: comma-separated little-endian coefficients, e.g. 1,0,1.")


@main.command()
@click.option("--q", type=int, required=True, help="Field order (prime power).")
@click.option("--n", "n_max", type=int, required=True, help="Largest dimension row.")
@click.option("--exact-cache", type=click.Path(exists=True), default=None,
              help="JSON file {n: {\"size\": int, \"status\": str}} of known values.")
@table_format_option
@out_option
def bounds(q: int, n_max: int, exact_cache: str | None, fmt: str, out: str | None):
    """Table of construction size vs closed-form upper bound for n = 1..N.

    For even q the upper column is marked n/a.  The n = 1 row records the
    exact value q after verifying the full line is free.
    """
    try:
        factor_prime_power(q)
        exact: dict[int, tuple[int, str]] = {}
        if exact_cache:
            with open(exact_cache, "r", encoding="utf-8") as fh:
                for key, val in json.load(fh).items():
                    exact[int(key)] = (int(val["size"]), str(val["status"]))
        if 1 not in exact:
            F = resolve_field(q, None)
            line = geometry.point_set(F, 1, ((e,) for e in F.elements()))
            if geometry.find_right_angle(line) is None:
                exact[1] = (q, "exact")
        rows = geometry.bounds_table(n_max, q, exact=exact)
    except (errors.Error, ValueError, OSError) as e:
        raise _usage(e)

    header = ["n", "lower_construction", "upper_bound", "exact", "status"]
    table = [
        [r.n, r.lower, r.upper if r.upper is not None else "n/a",
         r.exact if r.exact is not None else "", r.status or ""]
        for r in rows
    ]
    if fmt == "json":
        payload = [
            {"n": r.n, "q": r.q, "lower_construction": r.lower,
             "upper_bound": r.upper, "exact": r.exact, "status": r.status}
            for r in rows
        ]
        _emit(json.dumps(payload, indent=2), out)
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(header)
        writer.writerows(table)
        _emit(buf.getvalue().rstrip("\n"), out)
    else:
        widths = [max(len(str(x)) for x in [h] + [row[i] for row in table])
                  for i, h in enumerate(header)]
        lines = ["  ".join(str(h).ljust(w) for h, w in zip(header, widths))]
        for row in table:
            lines.append("  ".join(str(x).ljust(w) for x, w in zip(row, widths)))
        _emit("\n".join(lines), out)


@main.command()
@click.argument("file", type=click.Path())
@out_option
@click.pass_context
def verify(ctx, file: str, out: str | None):
    """Check a point-set file for right angles.

    Exit 0 when the set is free; exit 1 and print the witness when one is
    found; exit 2 on parse errors.
    """
    try:
        A = serial.load_point_set(file)
    except (errors.Error, ValueError, OSError) as e:
        raise _usage(e)
    witness = geometry.find_right_angle(A)
    if witness is None:
        _emit(json.dumps({"free": True, "size": len(A.points)}), out)
        ctx.exit(0)
    _emit(json.dumps({"free": False, "size": len(A.points),
                      "witness": serial.witness_to_json(witness, A)}, indent=2), out)
    ctx.exit(1)


@main.command()
@click.argument("file", type=click.Path())
@format_option
@out_option
@click.pass_context
def certify(ctx, file: str, fmt: str, out: str | None):
    """Build the agreement and angle-indicator tensors for a point-set file,
    compare them, and check the slice-decomposition certificate.

    For a verified-free input the report confirms size - 2 <= slice count;
    a violation is flagged REFUTATION and exits 1.  Inputs containing a right
    angle get the tensor disagreement reported and no certificate.
    """
    try:
        A = serial.load_point_set(file)
        if A.field.p == 2:
            raise errors.EvenCharacteristic("certify needs odd field characteristic")
        if len(A.points) > rank.TENSOR_SIZE_CAP:
            raise errors.TooLarge(
                f"{len(A.points)} points exceeds the tensor cap {rank.TENSOR_SIZE_CAP}")
    except (errors.Error, ValueError, OSError) as e:
        raise _usage(e)

    F = A.field
    m = len(A.points)
    witness = geometry.find_right_angle(A)
    ones = rank.coefficient_vector([F.one] * m, F)
    disagreement = rank.first_disagreement(
        rank.angle_indicator_tensor(A), rank.agreement_tensor(A, ones))

    report: dict = {
        "size": m,
        "free": witness is None,
        "witness": None if witness is None else serial.witness_to_json(witness, A),
        "tensor_disagreement": None if disagreement is None else {
            "cell": list(disagreement.cell),
            "angle_indicator": serial.element_to_json(disagreement.left, F),
            "agreement": serial.element_to_json(disagreement.right, F),
        },
    }

    exit_code = 0
    if witness is None:
        decomposition = rank.decompose_angle_tensor(A)
        mismatch = rank.check_decomposition(
            decomposition, rank.angle_indicator_tensor(A))
        s = len(decomposition.slices)
        certified = disagreement is None and mismatch is None and m - 2 <= s
        report.update({
            "slice_count": s,
            "slice_count_bound": rank.slice_count_bound(A.n, F.q),
            "rank_floor": m - 2,
            "certificate_valid": mismatch is None,
            "certified": certified,
            "refutation": not certified,
        })
        if not certified:
            exit_code = 1
    else:
        report.update({"certified": False, "refutation": False,
                       "note": "input contains a right angle; certificate skipped"})

    if fmt == "json":
        _emit(json.dumps(report, indent=2), out)
    else:
        lines = [f"points: {m}", f"free: {report['free']}"]
        if witness is not None:
            w = report["witness"]
            lines.append(
                f"witness: vertex {w['vertex']} arms {w['arm1']} / {w['arm2']}")
            lines.append("certificate skipped")
        else:
            lines.append(f"tensors agree: {disagreement is None}")
            lines.append(
                f"slice count: {report['slice_count']}"
                f" (bound {report['slice_count_bound']})")
            lines.append(
                f"rank floor {report['rank_floor']} <= {report['slice_count']}: "
                f"{report['rank_floor'] <= report['slice_count']}")
            lines.append("REFUTATION" if report["refutation"] else "certified")
        _emit("\n".join(lines), out)
    ctx.exit(exit_code)


@main.command()
@click.option("--q", type=int, required=True, help="Field order (prime power).")
@click.option("--n", type=int, required=True, help="Ambient dimension.")
@modulus_option
@format_option
@out_option
def construct(q: int, n: int, field_modulus: str | None, fmt: str, out: str | None):
    """Emit the weight-(q-1) zero-one layer and its verification verdict.

    The layer is never assumed free: find_right_angle runs on the output and
    the verdict (with a witness, if any) is printed alongside the points.
    """
    try:
        F = resolve_field(q, field_modulus)
        layer = geometry.construction_layer(n, q, field=F)
    except (errors.Error, ValueError, OSError) as e:
        raise _usage(e)
    witness = geometry.find_right_angle(layer)
    payload = {
        "n": n,
        "q": q,
        "size": len(layer.points),
        "free": witness is None,
        "witness": None if witness is None else serial.witness_to_json(witness, layer),
        "point_set": serial.point_set_to_json(layer),
    }
    if fmt == "json":
        _emit(json.dumps(payload, indent=2), out)
    else:
        lines = [f"layer q={q} n={n}: {len(layer.points)} points"]
        for pt in layer.points:
            lines.append("  " + str(serial.point_to_json(pt, F)))
        if witness is None:
            lines.append("verdict: right-angle-free")
        else:
            w = payload["witness"]
            lines.append(
                f"verdict: contains a right angle at vertex {w['vertex']}"
                f" with arms {w['arm1']} / {w['arm2']}")
        _emit("\n".join(lines), out)


@main.command(name="search")
@click.option("--q", type=int, required=True, help="Field order (prime power).")
@click.option("--n", type=int, required=True, help="Ambient dimension.")
@click.option("--method", type=click.Choice(["bb", "exhaustive", "greedy"]),
              default="bb", show_default=True, help="Solver to run.")
@click.option("--exact", is_flag=True, help="Require an exhausted search; exit 1 otherwise.")
@click.option("--seed", type=int, default=0, show_default=True, help="Greedy RNG seed.")
@click.option("--restarts", type=int, default=10, show_default=True,
              help="Greedy restart count.")
@click.option("--threads", type=int, default=1, show_default=True,
              help="Worker count recorded in the budget.")
@click.option("--budget-nodes", type=int, default=None, help="Node limit.")
@click.option("--budget-seconds", type=float, default=None, help="Time limit.")
@click.option("--orbit-reduce", is_flag=True,
              help="Also restrict the second point to orbit representatives.")
@click.option("--resume", "resume_path", type=click.Path(), default=None,
              help="Checkpoint file to resume from and update.")
@modulus_option
@format_option
@out_option
@click.pass_context
def search_cmd(ctx, q: int, n: int, method: str, exact: bool, seed: int,
               restarts: int, threads: int, budget_nodes: int | None,
               budget_seconds: float | None, orbit_reduce: bool,
               resume_path: str | None, field_modulus: str | None,
               fmt: str, out: str | None):
    """Search for a maximum right-angle-free subset of F_q^n."""
    try:
        F = resolve_field(q, field_modulus)
        budget = search.SearchBudget(max_nodes=budget_nodes,
                                     max_seconds=budget_seconds, threads=threads)
        resume_state = None
        if resume_path and os.path.exists(resume_path):
            with open(resume_path, "r", encoding="utf-8") as fh:
                resume_state = serial.checkpoint_from_json(json.load(fh))
        if method == "exhaustive":
            result = search.exhaustive_max(n, q, budget=budget, fld=F)
        elif method == "greedy":
            result = search.greedy_lower(n, q, seed=seed, restarts=restarts, fld=F)
        else:
            result = search.branch_and_bound_max(
                n, q, budget=budget, fld=F, orbit_reduce=orbit_reduce,
                resume=resume_state)
    except (errors.Error, ValueError, OSError) as e:
        raise _usage(e)

    if resume_path and result.checkpoint is not None:
        with open(resume_path, "w", encoding="utf-8") as fh:
            json.dump(serial.checkpoint_to_json(result.checkpoint), fh)

    if fmt == "json":
        _emit(json.dumps(serial.search_result_to_json(result), indent=2), out)
    else:
        lines = [
            f"max free-set size (n={n}, q={q})"
            f" {'=' if result.status == 'exact' else '>='} {result.size}"
            f"  [{result.status}]",
            f"nodes: {result.nodes}  elapsed: {result.elapsed:.3f}s",
            "points: " + json.dumps(serial.point_set_to_json(result.best)["points"]),
        ]
        _emit("\n".join(lines), out)
    if exact and result.status != "exact":
        click.echo("budget exhausted before the search space was fully explored",
                   err=True)
        ctx.exit(1)


@main.command()
@click.option("--q", type=int, required=True, help="Field order (odd prime power).")
@click.option("--m", "m", type=int, required=True, help="Coefficient vector length.")
@click.option("--trials", type=int, default=100, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@modulus_option
@format_option
@out_option
@click.pass_context
def rankcheck(ctx, q: int, m: int, trials: int, seed: int,
              field_modulus: str | None, fmt: str, out: str | None):
    """Randomized floor check: the agreement matrix of any all-nonzero
    coefficient vector should have rank at least m - 2.

    Exits 1 on any violation (which would be a reportable refutation).
    """
    try:
        F = resolve_field(q, field_modulus)
        if F.p == 2:
            raise errors.EvenCharacteristic("rankcheck needs odd field characteristic")
        if m < 1 or trials < 1:
            raise ValueError("m and trials must be positive")
    except (errors.Error, ValueError, OSError) as e:
        raise _usage(e)

    rng = random.Random(seed)
    nonzero = [e for e in F.elements() if e != F.zero]
    start = time.monotonic()
    min_rank = None
    violations = 0
    for _ in range(trials):
        C = rank.coefficient_vector([rng.choice(nonzero) for _ in range(m)], F)
        res = rank.agreement_rank_check(C, F)
        min_rank = res.rank if min_rank is None else min(min_rank, res.rank)
        if not res.holds:
            violations += 1
    elapsed = time.monotonic() - start

    payload = {"q": q, "m": m, "trials": trials, "seed": seed,
               "rank_floor": m - 2, "min_rank_observed": min_rank,
               "violations": violations, "elapsed": elapsed}
    if fmt == "json":
        _emit(json.dumps(payload, indent=2), out)
    else:
        _emit(
            f"q={q} m={m} trials={trials} seed={seed}: min rank {min_rank}, "
            f"floor {m - 2}, violations {violations}", out)
    ctx.exit(1 if violations else 0)


if __name__ == "__main__":
    main()
