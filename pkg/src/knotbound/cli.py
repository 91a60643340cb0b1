"""Command-line frontend.

Verbs: ``invariants`` (compute invariants of a braid word or an imported
planar diagram), ``family`` (built-in braid families), ``bounds``
(braid-index bound report), ``verify-paper`` (the reference verification
suite), ``cache`` (inspect or clear the result cache).

Exit codes: 0 success, 1 failed verification claim, 2 usage or parse
error, 3 precondition failure (e.g. a disconnected Seifert surface).
JSON output is deterministic: same input, byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import braid
from .braid import BraidWord, BraidError, parse_braid_word
from .bounds import ParityError, kr_report, mfw_report
from .cache import ENV_VAR, InvariantRecord, ResultCache, key_string
from .homfly import homfly
from .khovanov import (
    BigradedRanks,
    braid_to_pd,
    pd_from_text,
    pd_to_text,
    poincare_polynomial,
    reduced_khovanov,
)
from .laurent import AQPolynomial, to_aq
from .seifert import DisconnectedSurface, NotAKnot, determinant, signature
from .verify import run_claims

USAGE_ERROR = 2
PRECONDITION_ERROR = 3


def _aq_payload(aq: AQPolynomial) -> dict:
    return {"terms": aq.triples(), "clearing": aq.clearing, "text": aq.render()}


def _kh_payload(ranks: BigradedRanks) -> dict:
    return {"ranks": ranks.triples(), "poincare": poincare_polynomial(ranks)}


def _emit(payload: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(payload, sort_keys=True))
        return
    for key, value in payload.items():
        if isinstance(value, dict):
            value = value.get("text") or value.get("poincare") or value
        print(f"{key}: {value}")


def _invariant_payload(
    w: BraidWord,
    want_homfly: bool,
    want_khovanov: bool,
    want_seifert: bool,
    cache: ResultCache,
) -> dict:
    key = key_string(braid.canonical_closure_key(w))
    record = cache.load(key) if cache.enabled else None
    homfly_payload: Optional[dict] = None
    kh_payload: Optional[list] = None
    sig: Optional[int] = None
    det: Optional[int] = None
    if record is not None:
        homfly_payload = record.homfly
        kh_payload = record.khovanov
        sig, det = record.signature, record.determinant
    if want_homfly and homfly_payload is None:
        aq = to_aq(homfly(w))
        homfly_payload = {"terms": aq.triples(), "clearing": aq.clearing}
    if want_khovanov and kh_payload is None:
        kh_payload = reduced_khovanov(braid_to_pd(w)).triples()
    if want_seifert and (sig is None or det is None):
        sig = signature(w)
        det = determinant(w)
    if cache.enabled:
        cache.store(
            InvariantRecord.fresh(
                canonical_key=key,
                strands=w.strands,
                writhe=braid.writhe(w),
                components=braid.closure_components(w),
                homfly=homfly_payload,
                khovanov=kh_payload,
                signature=sig,
                determinant=det,
            )
        )
    payload: dict = {
        "word": str(w),
        "strands": w.strands,
        "writhe": braid.writhe(w),
        "components": braid.closure_components(w),
    }
    if want_homfly:
        aq = AQPolynomial.from_dict(
            {(ea, eq): c for ea, eq, c in homfly_payload["terms"]},
            homfly_payload["clearing"],
        )
        payload["homfly"] = _aq_payload(aq)
    if want_khovanov:
        ranks = BigradedRanks.from_dict({(i, j): r for i, j, r in kh_payload})
        payload["khovanov"] = _kh_payload(ranks)
    if want_seifert:
        payload["signature"] = sig
        payload["determinant"] = det
    return payload


def _cmd_invariants(args) -> int:
    if args.pd_file:
        text = open(args.pd_file).read()
        pd = pd_from_text(text)
        ranks = reduced_khovanov(pd)
        _emit({"khovanov": _kh_payload(ranks)}, args.json)
        return 0
    w = parse_braid_word(args.word, args.strands)
    if args.emit_pd:
        sys.stdout.write(pd_to_text(braid_to_pd(w)))
        return 0
    want_h = args.homfly or args.all
    want_k = args.khovanov or args.all
    want_s = args.seifert or args.all
    if not (want_h or want_k or want_s):
        want_h = True
    cache = ResultCache(args.cache_dir)
    payload = _invariant_payload(w, want_h, want_k, want_s, cache)
    _emit(payload, args.json)
    return 0


def _family_from_args(args) -> BraidWord:
    kind = args.kind
    if kind in ("elrifai-k", "elrifai-l"):
        if args.k is None:
            raise BraidError(f"{kind} requires --k")
        return braid.family_word(braid.FamilySpec(kind=kind, k=args.k))
    if kind == "bm":
        params = (args.x, args.y, args.z, args.w)
        if any(v is None for v in params):
            raise BraidError("bm requires --x --y --z --w")
        return braid.family_word(
            braid.FamilySpec(kind=kind, x=args.x, y=args.y, z=args.z, w=args.w)
        )
    if kind == "torus2":
        if args.q is None:
            raise BraidError("torus2 requires --q")
        return braid.family_word(braid.FamilySpec(kind=kind, q=args.q))
    if kind == "elrifai-res":
        if args.label is None:
            raise BraidError("elrifai-res requires --label")
        return braid.family_word(braid.FamilySpec(kind=kind, label=args.label))
    raise BraidError(f"unknown family {kind!r}")


def _bound_payload(w: BraidWord, delta_minus, delta_plus) -> dict:
    if (delta_minus is None) != (delta_plus is None):
        raise BraidError("supply both --delta-minus and --delta-plus or neither")
    if delta_minus is not None:
        return kr_report(w, delta_minus, delta_plus).as_dict()
    return mfw_report(w).as_dict()


def _cmd_family(args) -> int:
    w = _family_from_args(args)
    if args.emit == "word":
        if args.json:
            print(json.dumps({"strands": w.strands, "word": str(w)}, sort_keys=True))
        else:
            print(str(w))
        return 0
    if args.emit == "invariants":
        cache = ResultCache(args.cache_dir)
        payload = _invariant_payload(w, True, True, True, cache)
        _emit(payload, args.json)
        return 0
    payload = _bound_payload(w, args.delta_minus, args.delta_plus)
    _emit(payload, args.json)
    return 0


def _cmd_bounds(args) -> int:
    w = parse_braid_word(args.word, args.strands)
    payload = _bound_payload(w, args.delta_minus, args.delta_plus)
    _emit(payload, args.json)
    return 0


def _cmd_verify(args) -> int:
    results = run_claims(args.section)
    if args.json:
        print(json.dumps(results, sort_keys=True))
    else:
        for r in results:
            mark = "PASS" if r["passed"] else "FAIL"
            print(f"[{mark}] {r['section']}:{r['name']} - {r['detail']}")
        n_pass = sum(r["passed"] for r in results)
        print(f"{n_pass}/{len(results)} claims passed")
    return 0 if all(r["passed"] for r in results) else 1


def _cmd_cache(args) -> int:
    cache = ResultCache(args.cache_dir)
    if not cache.enabled:
        print(
            f"no cache directory configured (use --cache-dir or {ENV_VAR})",
            file=sys.stderr,
        )
        return USAGE_ERROR
    if args.action == "clear":
        cache.clear()
        return 0
    records = cache.records()
    if args.json:
        print(json.dumps([json.loads(r.to_json()) for r in records], sort_keys=True))
    else:
        for r in records:
            fields = [
                name
                for name, val in (
                    ("homfly", r.homfly),
                    ("khovanov", r.khovanov),
                    ("signature", r.signature),
                    ("determinant", r.determinant),
                )
                if val is not None
            ]
            print(f"{r.canonical_key}  strands={r.strands} writhe={r.writhe} "
                  f"components={r.components} fields={','.join(fields) or '-'}")
        print(f"{len(records)} record(s)")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knotbound",
        description="Braid-closure knot invariants and braid-index bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_inv = sub.add_parser("invariants", help="invariants of a braid closure")
    p_inv.add_argument("word", nargs="?", default="", help="whitespace-separated letters")
    p_inv.add_argument("--strands", type=int, default=None)
    p_inv.add_argument("--homfly", action="store_true")
    p_inv.add_argument("--khovanov", action="store_true")
    p_inv.add_argument("--seifert", action="store_true")
    p_inv.add_argument("--all", action="store_true")
    p_inv.add_argument("--json", action="store_true")
    p_inv.add_argument("--cache-dir", default=None)
    p_inv.add_argument("--emit-pd", action="store_true",
                       help="print the planar diagram of the closure and exit")
    p_inv.add_argument("--pd-file", default=None,
                       help="read a planar diagram file instead of a braid word")
    p_inv.set_defaults(func=_cmd_invariants)

    p_fam = sub.add_parser("family", help="built-in braid families")
    p_fam.add_argument(
        "kind", choices=["elrifai-k", "elrifai-l", "bm", "torus2", "elrifai-res"]
    )
    p_fam.add_argument("--k", type=int, default=None)
    p_fam.add_argument("--x", type=int, default=None)
    p_fam.add_argument("--y", type=int, default=None)
    p_fam.add_argument("--z", type=int, default=None)
    p_fam.add_argument("--w", type=int, default=None)
    p_fam.add_argument("--q", type=int, default=None)
    p_fam.add_argument("--label", default=None, choices=list(braid.RESOLUTION_LABELS))
    p_fam.add_argument("--emit", choices=["word", "invariants", "bounds"], default="word")
    p_fam.add_argument("--delta-minus", type=int, default=None)
    p_fam.add_argument("--delta-plus", type=int, default=None)
    p_fam.add_argument("--json", action="store_true")
    p_fam.add_argument("--cache-dir", default=None)
    p_fam.set_defaults(func=_cmd_family)

    p_bnd = sub.add_parser("bounds", help="braid-index bound report for a word")
    p_bnd.add_argument("word")
    p_bnd.add_argument("--strands", type=int, required=True)
    p_bnd.add_argument("--delta-minus", type=int, default=None)
    p_bnd.add_argument("--delta-plus", type=int, default=None)
    p_bnd.add_argument("--json", action="store_true")
    p_bnd.set_defaults(func=_cmd_bounds)

    p_ver = sub.add_parser("verify-paper", help="run the reference verification suite")
    p_ver.add_argument("--section", choices=["1", "2", "3", "4", "all"], default="all")
    p_ver.add_argument("--json", action="store_true")
    p_ver.set_defaults(func=_cmd_verify)

    p_cache = sub.add_parser("cache", help="inspect or clear the result cache")
    p_cache.add_argument("action", choices=["list", "clear"])
    p_cache.add_argument("--cache-dir", default=None)
    p_cache.add_argument("--json", action="store_true")
    p_cache.set_defaults(func=_cmd_cache)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    if args.command == "invariants" and not args.pd_file and args.strands is None:
        print("error: --strands is required with a braid word", file=sys.stderr)
        return USAGE_ERROR
    try:
        return args.func(args)
    except (DisconnectedSurface, NotAKnot) as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return PRECONDITION_ERROR
    except (BraidError, ParityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
