"""Command-line front end.

Exit codes: 0 finite (or success), 1 infinite (``decide`` only), 2 errors.
"""

from __future__ import annotations

import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Optional, Sequence

import click

from . import automata as am
from .builder import BuildMode, build_A_pi_perm
from .config import CLI
from .decide import build_A_C, cross_check, decide, random_basis
from .perm import Perm, fmt, is_simple, parse_perm
from .pinclass import is_pin_perm, pin_words

EXIT_FINITE, EXIT_INFINITE, EXIT_ERROR = 0, 1, 2


def read_basis(path: str) -> list[Perm]:
    """One permutation per line, spaced or compact; ``#`` starts a comment."""
    out = []
    for n, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            out.append(parse_perm(line))
        except ValueError as exc:
            raise click.ClickException(f"{path}:{n}: {exc}") from exc
    return out


def _perm_arg(text: str) -> Perm:
    try:
        return parse_perm(text)
    except ValueError as exc:
        raise click.BadParameter(str(exc)) from exc


def _emit(obj: dict, text: str, form: str) -> None:
    click.echo(json.dumps(obj, indent=2, sort_keys=True) if form == "json" else text)


def _write_dot(directory: Optional[str], name: str, body: str) -> None:
    if directory:
        d = Path(directory)
        d.mkdir(parents=True, exist_ok=True)
        (d / f"{name}.dot").write_text(body)


def _simples_check(args: tuple[list[Perm], int, str]) -> dict:
    """Simple avoiders up to a size, and whether each proper pin one is
    listed by a finite ``A_C``."""
    from .oracle import enumerate_simples_in_class

    basis, n, mode = args
    simples = enumerate_simples_in_class(basis, n)
    problems = cross_check(basis, mode, min(n, 8))
    return {"size": n, "simples": [fmt(p) for p in simples], "problems": problems}


@click.group()
@click.option("--format", "form", type=click.Choice(["text", "json"]), default=CLI.fmt)
@click.option("--mode", type=click.Choice([m.value for m in BuildMode]), default=BuildMode.OPTIMIZED.value)
@click.option("--emit-dot", "emit_dot", type=click.Path(file_okay=False), default=None)
@click.option("--max-word-len", type=click.IntRange(1, 9), default=CLI.max_word_len)
@click.option("--oracle-check", type=click.IntRange(0, 9), default=CLI.oracle_check,
              help="Cross-check against brute-force simples up to this size (0 disables).")
@click.option("--jobs", type=click.IntRange(1), default=CLI.jobs)
@click.pass_context
def cli(ctx, form, mode, emit_dot, max_word_len, oracle_check, jobs):
    """Finiteness of simple permutations in a finitely based class."""
    ctx.obj = dict(form=form, mode=mode, dot=emit_dot, max_len=max_word_len,
                   oracle_check=oracle_check, jobs=jobs)


@cli.command("decide")
@click.argument("basis_file", type=click.Path(exists=True, dir_okay=False))
@click.pass_obj
def decide_cmd(o, basis_file):
    """Decide a basis file; exit 0 when finite, 1 when infinite."""
    basis = read_basis(basis_file)
    verdict = decide(basis, o["mode"])
    out = verdict.to_dict()
    if o["dot"]:
        pins = [p for p in sorted(set(basis), key=lambda p: (len(p), p)) if is_pin_perm(p)]
        for i, p in enumerate(pins):
            _write_dot(o["dot"], f"A_{i}", am.to_dot(build_A_pi_perm(p, o["mode"]), f"A_{i}"))
        _write_dot(o["dot"], "A_C", am.to_dot(am.trim(build_A_C(pins, o["mode"])), "A_C"))
    if o["oracle_check"]:
        out["oracle_check"] = _simples_check((basis, o["oracle_check"], o["mode"]))
    lines = [f"basis: {' '.join(out['stats']['basis']) or '(empty)'}",
             f"verdict: {'finite' if verdict.finite else 'infinite'}"]
    lines += [f"  {k}: {'pass' if v else 'fail'}" for k, v in verdict.stages.items()]
    if verdict.witness:
        w = verdict.witness
        lines.append(f"witness: prefix={w.prefix!r} cycle={w.cycle!r} suffix={w.suffix!r}")
        lines.append(f"  pumped: {', '.join(w.samples)}")
    lines += [f"note: {n}" for n in out["stats"]["notes"]]
    if "oracle_check" in out:
        oc = out["oracle_check"]
        lines.append(f"oracle: {len(oc['simples'])} simple avoiders up to size {oc['size']}; "
                     f"{len(oc['problems'])} inconsistencies")
        lines += [f"  {p}" for p in oc["problems"]]
    _emit(out, "\n".join(lines), o["form"])
    if out.get("oracle_check", {}).get("problems"):
        sys.exit(EXIT_ERROR)
    sys.exit(EXIT_FINITE if verdict.finite else EXIT_INFINITE)


@cli.command("pinwords")
@click.argument("perm")
@click.pass_obj
def pinwords_cmd(o, perm):
    """List the pin words of a permutation."""
    p = _perm_arg(perm)
    words = sorted(pin_words(p), key=lambda w: (len(w), w)) if is_pin_perm(p) else []
    out = {"perm": fmt(p), "simple": is_simple(p), "count": len(words), "words": words}
    if o["oracle_check"]:
        from .oracle import enumerate_pin_words

        out["oracle_agrees"] = set(words) == set(enumerate_pin_words(p))
    text = "\n".join([f"{fmt(p)}: {len(words)} pin words", *words])
    if "oracle_agrees" in out:
        text += f"\noracle agrees: {out['oracle_agrees']}"
    _emit(out, text, o["form"])
    if out.get("oracle_agrees") is False:
        sys.exit(EXIT_ERROR)


@cli.command("automaton")
@click.argument("perm")
@click.pass_obj
def automaton_cmd(o, perm):
    """Build the automaton of a pin-permutation's reversed gap language."""
    p = _perm_arg(perm)
    if not is_pin_perm(p):
        raise click.ClickException(f"{fmt(p)} is not a pin-permutation")
    d = build_A_pi_perm(p, o["mode"])
    _write_dot(o["dot"], "A_0", am.to_dot(d, "A_0"))
    out = {"perm": fmt(p), "mode": o["mode"], "states": d.n_states,
           "finals": sorted(d.finals), "initial": d.initial,
           "marks": {k: {"state": v, "perm": fmt(d.mark_perms[k])} for k, v in sorted(d.marks.items())}}
    if o["oracle_check"]:
        from .oracle import reversed_language_mismatch

        exact = build_A_pi_perm(p, BuildMode.EXACT)
        bad = reversed_language_mismatch(p, exact, o["max_len"]) if len(p) <= 7 else None
        if bad is None and o["mode"] == BuildMode.OPTIMIZED.value:
            # the optimized automaton only has to agree on alternating words
            m = am.automaton_M()
            bad = am.equivalent(am.intersect(d, m), am.intersect(exact, m))
        out["oracle_mismatch"] = bad
    lines = [f"A_{fmt(p)} ({o['mode']}): {d.n_states} states, initial {d.initial}, final {sorted(d.finals)}"]
    lines += [f"  {k} -> state {v['state']} ({v['perm']})" for k, v in out["marks"].items()]
    if "oracle_mismatch" in out:
        lines.append(f"oracle mismatch: {out['oracle_mismatch']}")
    _emit(out, "\n".join(lines), o["form"])
    if out.get("oracle_mismatch"):
        sys.exit(EXIT_ERROR)


def _scan_one(args: tuple[list[Perm], str, int]) -> tuple[list[Perm], bool, list[str]]:
    basis, mode, max_len = args
    return basis, decide(basis, mode).finite, cross_check(basis, mode, max_len)


@cli.command("oracle-scan")
@click.argument("seed", type=int)
@click.argument("count", type=click.IntRange(1))
@click.pass_obj
def oracle_scan_cmd(o, seed, count):
    """Decide random bases and cross-check each against the oracle."""
    rng = random.Random(seed)
    jobs = [(random_basis(rng), o["mode"], min(o["max_len"], 8)) for _ in range(count)]
    if o["jobs"] > 1:
        with ProcessPoolExecutor(o["jobs"]) as ex:
            results = list(ex.map(_scan_one, jobs, chunksize=8))
    else:
        results = [_scan_one(j) for j in jobs]
    rows = [{"basis": [fmt(p) for p in b], "finite": f, "problems": pr} for b, f, pr in results]
    bad = [r for r in rows if r["problems"]]
    out = {"seed": seed, "count": count, "finite": sum(r["finite"] for r in rows),
           "inconsistent": len(bad), "results": rows}
    lines = [f"{count} bases, {out['finite']} finite, {len(bad)} inconsistent"]
    lines += [f"  {' '.join(r['basis'])}: {r['problems']}" for r in bad]
    _emit(out, "\n".join(lines), o["form"])
    if bad:
        sys.exit(EXIT_ERROR)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the CLI and return its exit code."""
    try:
        cli.main(args=list(argv) if argv is not None else None, standalone_mode=False)
    except SystemExit as exc:
        return int(exc.code or 0)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return EXIT_ERROR
    except (OSError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_ERROR
    return EXIT_FINITE


if __name__ == "__main__":
    sys.exit(main())
