"""Command-line front end.

    rankspaces analyze skew3.json --json
    rankspaces compression bordered4.json --json > report.json
    rankspaces compression bordered4.json --verify report.json
    rankspaces oracle bordered4_f5.json --k1 1 --k2 1 --json
    rankspaces bridge --sections-dim 2

Instance arguments may be paths or names of bundled corpus files.
Exit status: 0 on success, 1 on errors, 2 when ``--strict-expect`` finds a
mismatch with the instance's ``metadata.expect`` block.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import serialize as ser
from .bridge import (
    classify_rank2,
    sections_dim_p1,
    trivial_iff_irreducible_pair,
)
from .errors import FieldMismatch, RankspacesError
from .fields import GF, QQ, PrimeField, field_from_tag
from .lie import (
    adjoint_representation,
    derived_series,
    invariant_subspace_witness,
    is_absolutely_irreducible,
    verify_lie_algebra,
    verify_representation,
)
from .matrix_space import (
    DEFAULT_PRIME,
    DEFAULT_RETRIES,
    SYMBOLIC_MAX_D,
    SYMBOLIC_MAX_DIM,
    MatrixSpace,
    common_kernel_and_image,
    constant_rank_verdict,
    generic_rank,
    verify_certificate,
)
from .oracle import DEFAULT_BUDGET, RANK2_SPLITS, brute_force_compression_fp, search_size
from .pencil import kronecker_minimal_indices, pencil_constant_rank, pencil_from_space

COMMANDS = ("analyze", "constant-rank", "compression", "pencil-invariants",
            "lie-check", "irreducible", "bridge", "oracle")


class UsageError(RankspacesError):
    pass


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with status 1; status 2 is reserved for --strict-expect."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="rankspaces", description=__doc__.split("\n\n")[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("instance", nargs="?", help="instance file or bundled corpus name")
    p.add_argument("--field", help="q or fp:<p>; reduce a rational instance mod p")
    p.add_argument("--prime", type=int, default=None,
                   help=f"prime for exhaustive constant-rank checks (default {DEFAULT_PRIME})")
    p.add_argument("--oracle-prime", type=int, default=5,
                   help="prime for the brute-force oracle inside analyze (default 5)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--retries", type=int, default=DEFAULT_RETRIES)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="oracle enumeration cap")
    p.add_argument("--json", action="store_true", help="JSON report on stdout")
    p.add_argument("--quiet", action="store_true", help="suppress the human-readable summary")
    p.add_argument("--force", action="store_true",
                   help=f"allow symbolic minors beyond m, n <= {SYMBOLIC_MAX_DIM}, d <= {SYMBOLIC_MAX_D}")
    p.add_argument("--strict-expect", action="store_true",
                   help="exit 2 if results differ from metadata.expect")
    p.add_argument("--verify", metavar="CERT", help="compression: re-check a certificate or report")
    p.add_argument("--k1", type=int, help="oracle: codimension of V'")
    p.add_argument("--k2", type=int, help="oracle: dimension of W'")
    p.add_argument("--sections-dim", type=int, metavar="N", help="bridge: h0 of O(N) on P^1")
    p.add_argument("--pair", type=int, metavar="N", help="bridge: triviality vs irreducible pair for O(N)")
    return p


class Runner:
    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.notes: list[str] = []
        self.verdict = None
        self.facts: dict[str, Any] = {}

    # -- helpers ---------------------------------------------------------

    def note(self, line: str):
        self.notes.append(line)

    def load(self):
        if not self.args.instance:
            raise UsageError(f"{self.args.command} needs an instance argument")
        inst = ser.load_instance(ser.resolve_path(self.args.instance))
        if self.args.field and inst.kind in ("matrix-space", "pencil"):
            inst.payload = self._retarget(inst.payload, field_from_tag(self.args.field))
        return inst

    def _retarget(self, space: MatrixSpace, F) -> MatrixSpace:
        if space.field == F:
            return space
        if isinstance(F, PrimeField) and space.field == QQ:
            return space.reduce(F)
        raise FieldMismatch(f"modulus conflict: instance is over {space.field.tag}, --field is {F.tag}")

    def exhaustion_prime(self, space: MatrixSpace) -> int:
        if isinstance(space.field, PrimeField):
            if self.args.prime is not None and self.args.prime != space.field.p:
                raise FieldMismatch(
                    f"modulus conflict: instance is over F_{space.field.p}, --prime is {self.args.prime}")
            return space.field.p
        return self.args.prime or DEFAULT_PRIME

    def symbolic_allowed(self, space: MatrixSpace) -> bool:
        within = max(space.rows, space.cols) <= SYMBOLIC_MAX_DIM and space.d <= SYMBOLIC_MAX_D
        if within or self.args.force:
            return True
        self.note(f"symbolic minors skipped ({space.rows}x{space.cols}, d={space.d} beyond desk scale); "
                  "rank upper bound is sampled only, pass --force to expand")
        return False

    # -- matrix spaces ---------------------------------------------------

    def rank_section(self, space: MatrixSpace) -> dict:
        symbolic = self.symbolic_allowed(space)
        v = constant_rank_verdict(space, p=self.exhaustion_prime(space), seed=self.args.seed,
                                  symbolic=symbolic, budget=self.args.budget)
        self.verdict = v
        doc = ser.verdict_to_json(v, space.field)
        cr = v.constant_rank
        self.facts.update(generic_rank=v.generic_rank, constant_rank=cr.status.value,
                          upper_bound=v.upper_bound.value)
        line = f"generic rank {v.generic_rank} (upper bound {v.upper_bound.value}); constant rank: {cr.status.value}"
        if cr.prime:
            line += f" over F_{cr.prime} ({cr.points_checked} points)"
        if cr.witness is not None:
            line += f", rank {cr.witness_rank} at {ser.vector_to_json(field_from_tag(cr.witness_field), cr.witness)}"
        if cr.gcd is not None:
            line += f", minor gcd {cr.gcd.format(['s', 't'])}"
        self.note(line)
        return doc

    def compression_section(self, space: MatrixSpace) -> dict:
        verdict = getattr(self, "verdict", None) or generic_rank(
            space, seed=self.args.seed, symbolic=self.symbolic_allowed(space))
        k = verdict.generic_rank
        if k > 2:
            self.facts["primitive"] = None
            self.note(f"compression: rank-2 procedure inapplicable (generic rank {k})")
            return {"applicable": False, "reason": f"generic rank {k} > 2"}
        report = classify_rank2(space, seed=self.args.seed, retries=self.args.retries, verdict=verdict)
        doc = ser.report_to_json(report)
        self.facts.update(primitive=report.primitive, split=list(report.split) if report.split else None)
        if report.primitive:
            self.note("compression: none found (primitive)")
        else:
            c = report.compression
            self.note(f"compression: split ({c.k1},{c.k2}) via {c.split_rule}; "
                      f"V' dim {c.Vprime.dim}, W' dim {c.Wprime.dim}; "
                      f"{len(report.rep_view)} irreducible 1-dim summand representations")
        return doc

    def oracle_section(self, space: MatrixSpace) -> dict:
        p = space.field.p if isinstance(space.field, PrimeField) else self.args.oracle_prime
        try:
            red = space.reduce(GF(p)) if not isinstance(space.field, PrimeField) else space
        except RankspacesError as exc:
            return {"prime": p, "skipped": str(exc)}
        out: dict = {"prime": p, "splits": {}}
        for k1, k2 in RANK2_SPLITS:
            key = f"{k1},{k2}"
            if search_size(red, k1, k2) > self.args.budget:
                out["splits"][key] = {"skipped": "budget"}
                continue
            cert = brute_force_compression_fp(red, k1, k2, self.args.budget)
            out["splits"][key] = ser.certificate_to_json(cert)
        found = [k for k, v in out["splits"].items() if v and "skipped" not in v]
        self.note(f"F_{p} oracle: certificates for splits {found or 'none'}")
        return out

    def pencil_section(self, space: MatrixSpace) -> dict:
        A, B = pencil_from_space(space)
        inv = kronecker_minimal_indices(A, B)
        const, g = pencil_constant_rank(A, B)
        self.facts.update(right_minimal_indices=list(inv.right_minimal_indices),
                          left_minimal_indices=list(inv.left_minimal_indices),
                          minor_gcd_degree=inv.minor_gcd_degree)
        self.note(f"pencil: normal rank {inv.normal_rank}, right indices {list(inv.right_minimal_indices)}, "
                  f"left indices {list(inv.left_minimal_indices)}, minor gcd {g.format(['s', 't'])}")
        return {**ser.pencil_to_json(inv), "constant_rank": const}

    # -- algebras --------------------------------------------------------

    def lie_section(self, g) -> dict:
        ok = verify_lie_algebra(g)
        ds = derived_series(g)
        ad = adjoint_representation(g)
        self.facts.update(jacobi=ok, derived_dims=list(ds.dims), solvable=ds.solvable)
        self.note(f"Lie algebra dim {g.dim}: Jacobi {'holds' if ok else 'FAILS'}, derived dims "
                  f"{list(ds.dims)}, {'solvable' if ds.solvable else 'not solvable'}")
        return {"dim": g.dim, "jacobi": ok, "derived_dims": list(ds.dims), "solvable": ds.solvable,
                "adjoint_homomorphism": verify_representation(ad)}

    def rep_section(self, pi) -> dict:
        hom = verify_representation(pi)
        irr = is_absolutely_irreducible(pi)
        U = invariant_subspace_witness(pi, seed=self.args.seed, retries=self.args.retries)
        self.facts.update(homomorphism=hom, irreducible=irr.irreducible, enveloping_dim=irr.enveloping_dim)
        self.note(f"representation dim {pi.dimV}: homomorphism {hom}, enveloping dim "
                  f"{irr.enveloping_dim}/{pi.dimV ** 2}, "
                  f"{'absolutely irreducible' if irr.irreducible else 'reducible'}")
        return {"dimV": pi.dimV, "homomorphism": hom, "irreducible": irr.irreducible,
                "enveloping_dim": irr.enveloping_dim,
                "invariant_subspace": ser.subspace_to_json(U) if U is not None else None}

    # -- commands --------------------------------------------------------

    def run(self) -> tuple[dict, dict]:
        cmd = self.args.command.replace("-", "_")
        inst = None
        if cmd != "bridge" or self.args.instance:
            inst = self.load()
        doc = getattr(self, f"cmd_{cmd}")(inst)
        if inst is not None:
            doc = {"instance": inst.name or self.args.instance, **doc}
        return doc, (inst.metadata.get("expect", {}) if inst else {})

    def _space(self, inst) -> MatrixSpace:
        if inst.kind not in ("matrix-space", "pencil"):
            raise UsageError(f"{self.args.command} needs a matrix-space or pencil instance, got {inst.kind}")
        return inst.payload

    def cmd_analyze(self, inst) -> dict:
        if inst.kind == "lie-algebra":
            return {"kind": inst.kind, "lie": self.lie_section(inst.payload)}
        if inst.kind == "representation":
            return {"kind": inst.kind, "representation": self.rep_section(inst.payload)}
        space = inst.payload
        doc: dict = {"kind": inst.kind, "field": space.field.tag, "shape": [space.rows, space.cols],
                     "dim": space.d}
        doc["rank"] = self.rank_section(space)
        cs = common_kernel_and_image(space)
        doc["common"] = {"kernel": ser.subspace_to_json(cs.ck), "image": ser.subspace_to_json(cs.ci)}
        doc["compression"] = self.compression_section(space)
        doc["oracle"] = self.oracle_section(space)
        if space.d == 2:
            doc["pencil"] = self.pencil_section(space)
        return doc

    def cmd_constant_rank(self, inst) -> dict:
        return self.rank_section(self._space(inst))

    def cmd_compression(self, inst) -> dict:
        space = self._space(inst)
        if self.args.verify:
            with open(ser.resolve_path(self.args.verify), encoding="utf-8") as fh:
                cert = ser.certificate_from_json(json.load(fh))
            if cert.Vprime.field != space.field:
                raise FieldMismatch("certificate and instance over different fields")
            symbolic = self.symbolic_allowed(space)
            k = generic_rank(space, seed=self.args.seed, symbolic=symbolic).generic_rank
            ok = verify_certificate(space, cert, rank=k)
            self.facts["valid"] = ok
            self.note(f"certificate ({cert.k1},{cert.k2}) {'verified' if ok else 'REJECTED'}")
            return {"valid": ok, "certificate": ser.certificate_to_json(cert)}
        return self.compression_section(space)

    def cmd_pencil_invariants(self, inst) -> dict:
        return self.pencil_section(self._space(inst))

    def cmd_lie_check(self, inst) -> dict:
        if inst.kind != "lie-algebra":
            raise UsageError(f"lie-check needs a lie-algebra instance, got {inst.kind}")
        return self.lie_section(inst.payload)

    def cmd_irreducible(self, inst) -> dict:
        if inst.kind != "representation":
            raise UsageError(f"irreducible needs a representation instance, got {inst.kind}")
        return self.rep_section(inst.payload)

    def cmd_bridge(self, inst) -> dict:
        a = self.args
        if inst is not None:
            return self.compression_section(self._space(inst))
        if a.sections_dim is not None:
            n = a.sections_dim
            h0 = sections_dim_p1(n)
            self.facts["sections_dim"] = h0
            self.note(str(h0))
            return {"degree": n, "sections_dim": h0}
        if a.pair is not None:
            v = trivial_iff_irreducible_pair(a.pair)
            self.note(f"O({v.degree}): {'trivial' if v.trivial else 'nontrivial'}, dim V_E {v.dim_VE}, "
                      f"faithful irreducible representation {'exists' if v.has_irreducible_pair else 'does not exist'}")
            return {"degree": v.degree, "trivial": v.trivial, "dim_VE": v.dim_VE,
                    "has_irreducible_pair": v.has_irreducible_pair}
        raise UsageError("bridge needs an instance, --sections-dim N or --pair N")

    def cmd_oracle(self, inst) -> dict:
        space = self._space(inst)
        if not isinstance(space.field, PrimeField):
            raise UsageError("oracle needs a prime-field instance; pass --field fp:<p>")
        if self.args.k1 is None or self.args.k2 is None:
            raise UsageError("oracle needs --k1 and --k2")
        k1, k2 = self.args.k1, self.args.k2
        cert = brute_force_compression_fp(space, k1, k2, self.args.budget)
        self.facts["found"] = cert is not None
        self.note(f"F_{space.field.p} oracle ({k1},{k2}): "
                  f"{'certificate found' if cert else 'no certificate'} among {search_size(space, k1, k2)} pairs")
        return {"k1": k1, "k2": k2, "prime": space.field.p, "pairs": search_size(space, k1, k2),
                "certificate": ser.certificate_to_json(cert)}


def check_expectations(expect: dict, facts: dict) -> list[str]:
    mismatches = []
    for key, want in sorted(expect.items()):
        if key in facts and facts[key] != want:
            mismatches.append(f"{key}: expected {want!r}, got {facts[key]!r}")
    return mismatches


def run_command(command: str, instance: str | None = None, **flags) -> tuple[int, dict, list[str]]:
    """Programmatic entry: returns (exit status, report, human-readable lines).

    Flags use the long option names with underscores, e.g.
    ``run_command("oracle", "bordered4_f5", k1=1, k2=1)``. Errors propagate
    as exceptions instead of becoming exit status 1.
    """
    argv = [command] + ([str(instance)] if instance is not None else [])
    args = build_parser().parse_args(argv)
    for key, value in flags.items():
        if not hasattr(args, key):
            raise TypeError(f"unknown flag {key!r}")
        setattr(args, key, value)
    runner = Runner(args)
    doc, expect = runner.run()
    status = 0
    if args.strict_expect and expect and check_expectations(expect, runner.facts):
        status = 2
    return status, doc, runner.notes


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    runner = Runner(args)
    try:
        doc, expect = runner.run()
    except (RankspacesError, OSError, json.JSONDecodeError) as exc:
        print(f"rankspaces: error: {exc}", file=sys.stderr)
        return 1
    status = 0
    if args.strict_expect and expect:
        mismatches = check_expectations(expect, runner.facts)
        doc["expectations"] = {"checked": sorted(k for k in expect if k in runner.facts),
                               "mismatches": mismatches}
        if mismatches:
            status = 2
            runner.note("expectation mismatches: " + "; ".join(mismatches))
    text = "\n".join(runner.notes)
    if args.json:
        sys.stdout.write(ser.dumps(doc))
        if text and not args.quiet:
            print(text, file=sys.stderr)
    elif not args.quiet:
        print(text)
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
