"""Command-line entry point: analyze, lattice, census, verify.

Exit codes: 0 success, 1 a claim failed, 2 usage or parse error, 3 a size
cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from .catalog import CatalogEntry, default_catalog, load_group_file
from .catalog import builders as b
from .errors import CapExceeded, GroupError
from .predicates import FLAG_NAMES
from .structure.lattice import cached_lattice, subgroup_lattice
from .structure.subgroups import LATTICE_CAP
from .verify import CLAIMS, Workspace, check_claim, reports_to_json, run_census
from .verify.context import GroupData

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
CACHE_ENV = "HAMILTONIA_CACHE_DIR"

log = logging.getLogger("hamiltonia")


class UsageError(GroupError):
    pass


def _ints(parts, ref):
    try:
        return [int(x) for x in parts]
    except ValueError:
        raise UsageError(f"expected integers in {ref!r}") from None


def _prime_power(text, ref):
    base, _, exp = text.partition("^")
    p, m = _ints([base, exp or "1"], ref)
    return p, m


def _split_top_level(text: str) -> list[str]:
    """Split on commas not nested inside a prod:...(...) argument."""
    parts, depth, cur = [], 0, ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    parts.append(cur)
    return parts


def resolve_group(ref: str) -> CatalogEntry:
    """Turn a group reference into a catalog entry.

    Builtins: cyclic:n, dihedral:n (order), dicyclic:n (order 4n), sym:n,
    alt:n, sl:2:p, psl:2:q, pgl:2:q, semidirect:p^m:q^n:k, prod:A,B.
    Anything with a path separator or a .grp suffix is read as a file.
    """
    ref = ref.strip()
    if os.sep in ref or "/" in ref or ref.endswith(".grp"):
        return load_group_file(ref)
    kind, _, rest = ref.partition(":")
    if kind == "prod":
        parts = _split_top_level(rest)
        if len(parts) < 2 or not all(parts):
            raise UsageError(f"prod needs at least two references: {ref!r}")
        return b.product_entry(*(resolve_group(p.strip("()")) for p in parts))
    args = rest.split(":") if rest else []
    if kind in ("cyclic", "dihedral", "dicyclic", "sym", "alt"):
        if len(args) != 1:
            raise UsageError(f"{kind} takes one integer: {ref!r}")
        (n,) = _ints(args, ref)
        if n < 1:
            raise UsageError(f"{kind} needs a positive integer: {ref!r}")
        if kind == "dihedral" and (n < 4 or n % 2):
            raise UsageError(f"dihedral order must be even and at least 4: {ref!r}")
        if kind in ("dicyclic",) and n < 2:
            raise UsageError(f"dicyclic needs n >= 2: {ref!r}")
        maker = {"cyclic": b.cyclic, "dihedral": b.dihedral, "dicyclic": b.dicyclic,
                 "sym": b.symmetric, "alt": b.alternating}[kind]
        return maker(n)
    if kind in ("sl", "psl", "pgl"):
        if len(args) != 2:
            raise UsageError(f"{kind} takes dimension and field size: {ref!r}")
        dim, q = _ints(args, ref)
        return b.matrix_group(kind.upper(), dim, q)
    if kind == "semidirect":
        if len(args) != 3:
            raise UsageError(f"semidirect takes p^m:q^n:k: {ref!r}")
        p, m = _prime_power(args[0], ref)
        q, n = _prime_power(args[1], ref)
        (k,) = _ints(args[2:], ref)
        return b.semidirect_cyclic(p, m, q, n, k)
    raise UsageError(f"unrecognized group reference {ref!r}")


def _cache_dir(arg):
    if arg:
        return Path(arg)
    env = os.environ.get(CACHE_ENV)
    return Path(env) if env else None


def default_cache_dir() -> Path:
    base = os.environ.get("XDG_CACHE_HOME") or Path.home() / ".cache"
    return Path(base) / "hamiltonia"


def _emit(text: str):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


# -- commands ------------------------------------------------------------------


def cmd_analyze(args) -> int:
    entry = resolve_group(args.group)
    data = GroupData(entry, _cache_dir(args.cache_dir))
    res = data.predicates(args.family)
    out = {
        "group": entry.label,
        "degree": entry.group.degree,
        "order": entry.order,
        "primes": data.primes,
        "name": data.name,
        "family": args.family,
        "subgroups": len(data.lattice),
        "frattini_order": data.frattini.order,
        "flags": res.flags,
        "witnesses": {k: data.describe(i) for k, i in sorted(res.witnesses.items())},
    }
    if args.format == "json":
        _emit(json.dumps(out, indent=2))
        return EXIT_OK
    lines = [
        f"group:    {entry.label} (degree {entry.group.degree})",
        f"order:    {entry.order}",
        f"primes:   {{{','.join(map(str, data.primes))}}}",
        f"name:     {data.name or 'unrecognized'}",
        f"subgroups: {len(data.lattice)}",
        f"Frattini order: {data.frattini.order}",
        f"family:   {args.family}",
    ]
    for k in FLAG_NAMES:
        line = f"  {k:<18} {str(res.flags[k]).lower()}"
        if k in out["witnesses"]:
            w = out["witnesses"][k]
            line += f"  witness #{w['index']} order {w['order']} {w['name'] or ''}".rstrip()
        lines.append(line)
    _emit("\n".join(lines))
    return EXIT_OK


def cmd_lattice(args) -> int:
    entry = resolve_group(args.group)
    if args.no_cache:
        L, status = subgroup_lattice(entry.group, args.cap), "off"
    else:
        cache = _cache_dir(args.cache_dir) or default_cache_dir()
        L, status = cached_lattice(entry.group, cache, args.cap)
    classes = L.conjugacy_classes
    normal = L.normal_subgroups()
    out = {
        "group": entry.label,
        "order": entry.order,
        "subgroups": len(L),
        "conjugacy_classes": len(classes),
        "normal": [{"index": i, "order": L[i].order} for i in normal],
        "cache": status,
    }
    if args.format == "json":
        _emit(json.dumps(out, indent=2))
        return EXIT_OK
    _emit(
        "\n".join(
            [
                f"{entry.label}: order {entry.order}",
                f"subgroups: {len(L)}",
                f"conjugacy classes: {len(classes)}",
                f"normal subgroups ({len(normal)}): " + ", ".join(f"#{i}(order {L[i].order})" for i in normal),
                f"cache: {status}",
            ]
        )
    )
    return EXIT_OK


def _scope(refs):
    if not refs or refs == ["default"]:
        return default_catalog()
    out = []
    for r in refs:
        out.extend(default_catalog() if r == "default" else [resolve_group(r)])
    return out


def cmd_census(args) -> int:
    scope = [e for e in _scope(args.scope) if e.order <= args.max_order]
    ws = Workspace(_cache_dir(args.cache_dir))
    table = run_census(scope, workspace=ws, strict=args.strict)
    _emit(table.to_json() if args.format == "json" else table.to_text())
    return EXIT_FAIL if table.violations else EXIT_OK


def _claim_ids(text: str) -> list[str]:
    if text == "all":
        return list(CLAIMS)
    ids = [c.strip() for c in text.split(",") if c.strip()]
    unknown = [c for c in ids if c not in CLAIMS]
    if unknown or not ids:
        raise UsageError(f"unknown claim id(s): {', '.join(unknown) or text!r}; known: {', '.join(CLAIMS)}")
    return ids


def cmd_verify(args) -> int:
    ids = _claim_ids(args.claims)
    scope = _scope(args.scope)
    ws = Workspace(_cache_dir(args.cache_dir))
    reports = [check_claim(c, scope, ws) for c in ids]
    if args.format == "json":
        _emit(reports_to_json(reports))
    else:
        _emit("\n\n".join(r.to_text(verbose=args.verbose) for r in reports))
    for r in reports:
        log.info("%s finished in %.2fs", r.claim, r.elapsed)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hamiltonia", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, with_format=True):
        sp.add_argument("--cache-dir", help=f"lattice cache directory (overrides ${CACHE_ENV})")
        if with_format:
            sp.add_argument("--format", choices=("text", "json"), default="text")

    a = sub.add_parser("analyze", help="order, name, and predicate flags of one group")
    a.add_argument("group")
    a.add_argument("--family", choices=("nilpotent", "abelian"), default="nilpotent")
    common(a)
    a.set_defaults(func=cmd_analyze)

    lat = sub.add_parser("lattice", help="subgroup lattice summary, cached on disk")
    lat.add_argument("group")
    lat.add_argument("--cap", type=int, default=LATTICE_CAP, help="largest group order to enumerate")
    lat.add_argument("--no-cache", action="store_true", help="neither read nor write the cache")
    common(lat)
    lat.set_defaults(func=cmd_lattice)

    c = sub.add_parser("census", help="predicate flags for every scope group")
    c.add_argument("--scope", nargs="*", default=["default"], help="group references, or 'default'")
    c.add_argument("--max-order", type=int, default=10**9)
    c.add_argument("--strict", action="store_true", help="exit 3 instead of skipping over-cap groups")
    common(c)
    c.set_defaults(func=cmd_census)

    v = sub.add_parser("verify", help="run claim checkers")
    v.add_argument("--claims", default="all", help="'all' or comma-separated ids")
    v.add_argument("--scope", nargs="*", default=["default"], help="group references, or 'default'")
    common(v)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (GroupError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
