"""Main CLI entry point for the radical-frame toolkit."""

import json
import logging
from pathlib import Path

import click
import yaml
from rich import box
from rich.logging import RichHandler
from rich.markup import escape
from rich.panel import Panel
from rich.table import Table

from config.settings import settings
from src.apps import (
    Matrix,
    generic_freeness_simple,
    mccoy_regularity,
    richman_harness,
    verify_freeness,
)
from src.cli.models import CommandRequest, ExitCode, OutputFormat
from src.cli.utils import (
    console,
    emit,
    finish,
    handle_errors,
    parse_bindings,
    parse_generators,
    show,
)
from src.frame import LeqCertificate, Open, equal, leq, verify_leq
from src.ideals import CertificateError, CertificateRecord, verify_membership
from src.logic import (
    Bottom,
    Calculus,
    Fragment,
    check_derivation,
    classify,
    dump_derivation,
    format_formula,
    format_sequent,
    load_axioms,
    load_derivation,
    nabla_translate,
    parse_formula,
    parse_sequent,
)
from src.oracles import (
    CoherentProver,
    brute_truth_open,
    enumerate_prime_filters,
    normalize_sequent,
    prime_filter_prover,
    prime_filter_theory,
)
from src.orchestration import SelftestRunner
from src.rings import RingPresentation, UnsupportedRingError, make_ring
from src.semantics import (
    Verdict,
    certificate_from_record,
    certificate_to_record,
    certify_forcing,
    check_forcing_certificate,
    forces,
    truth_open,
)

# Setup logging with Rich handler
logging.basicConfig(
    level=getattr(logging, settings.log_level),
    format="%(message)s",
    datefmt="[%X]",
    handlers=[RichHandler(rich_tracebacks=True, markup=True, console=console)],
)

logger = logging.getLogger(__name__)


def ring_option(required: bool = True):
    return click.option(
        "--ring",
        "ring_spec",
        required=required,
        help='Ring description, e.g. "Z", "Z/12" or "Q[x,y]/(x^2 - y)"',
    )


format_option = click.option(
    "--format",
    "output",
    type=click.Choice([f.value for f in OutputFormat]),
    default=OutputFormat.PRETTY.value,
    show_default=True,
    help="pretty for people, structured for one JSON record per line",
)

var_option = click.option(
    "--var", "bindings", multiple=True, help="Free variable value, name=element (repeatable)"
)


def _constants(ring: RingPresentation | None) -> tuple[str, ...]:
    return tuple(ring.variables) if ring is not None else ()


def _leq_record(certificate: LeqCertificate) -> dict:
    upper = certificate.upper
    return {
        "kind": "leq",
        "ring": upper.ring.spec,
        "lower": [str(g) for g in certificate.lower.generators],
        "upper": [str(g) for g in upper.generators],
        "certificates": [c.to_record(upper.support).model_dump() for c in certificate.certificates],
    }


@click.group()
@click.version_option(version="0.1.0", prog_name="rframe")
@click.option("-v", "--verbose", is_flag=True, help="Log algorithm traces at DEBUG level")
def cli(verbose):
    """Certificates for the frame of radical ideals, its forcing semantics and proofs.

    \b
    Examples:
      rframe entails --ring Z/6 "D(1)" "D(2),D(3)"
      rframe force --ring Z --at 1 "false"
      rframe truth-open --ring Z/4 "not (exists y. 2*y = 1) => 2 = 0"
      rframe nabla-translate "D(2) | D(3)"
      rframe prove --ring Z/6 "D(1) |- D(2) | D(3)"
      rframe mccoy --ring Z/6 "2; 3"
      rframe selftest --suite entailment
    """
    if verbose:
        logging.getLogger().setLevel(logging.DEBUG)


@cli.command()
@ring_option()
@click.argument("lower")
@click.argument("upper")
@format_option
@handle_errors
def entails(ring_spec, lower, upper, output):
    """Decide D(f_1, ...) <= D(g_1, ...) with a radical-membership certificate.

    \b
    Exit codes: 0 entailment holds, 1 it fails (with a separating prime
    filter over Z/n), 3 malformed input.
    """
    request = CommandRequest(subcommand="entails", ring=ring_spec, payload=[lower, upper], output=output)
    ring = make_ring(ring_spec)
    u = Open.generated_by(ring, parse_generators(ring, lower))
    v = Open.generated_by(ring, parse_generators(ring, upper))
    certificate = leq(u, v)

    if certificate is None:
        record = {"ring": ring.spec, "holds": False, "lower": str(u), "upper": str(v)}
        pretty = [f"[yellow]{u} is not below {v}[/yellow] in {ring.spec}"]
        if ring.is_finite:
            for pf in enumerate_prime_filters(ring):
                if any(g in pf for g in u.generators) and not any(g in pf for g in v.generators):
                    record["separating_filter"] = sorted(pf.carrier)
                    pretty.append(f"  separating prime filter {pf}")
                    break
        emit(request, record, pretty)
        finish(ExitCode.NEGATIVE)

    if not verify_leq(certificate):
        raise CertificateError("Leq certificate does not verify", ring=ring.spec)
    pretty = [f"[green]{u} <= {v}[/green] in {ring.spec}"]
    pretty += [f"  {line}" for line in certificate.describe()]
    emit(request, {"holds": True, **_leq_record(certificate)}, pretty)
    finish(ExitCode.AFFIRMATIVE)


@cli.command("truth-open")
@ring_option()
@var_option
@click.option("--check", is_flag=True, help="Compare with the literal forcing clauses (Z/n only)")
@click.argument("formula")
@format_option
@handle_errors
def truth_open_command(ring_spec, bindings, check, formula, output):
    """Compute the largest open forcing a formula.

    \b
    Exit codes: 0 computed, 1 --check found a disagreement, 2 the compiler
    cannot handle some subformula, 3 malformed input.
    """
    request = CommandRequest(subcommand="truth-open", ring=ring_spec, payload=[formula], output=output)
    ring = make_ring(ring_spec)
    env = parse_bindings(ring, bindings)
    phi = parse_formula(formula, variables=tuple(env), constants=_constants(ring))
    truth = truth_open(ring, phi, env)

    if not truth.known:
        emit(
            request,
            {"ring": ring.spec, "formula": format_formula(phi), "known": False, "reason": truth.unknown_reason},
            [f"[yellow]Unknown:[/yellow] {truth.unknown_reason}"],
        )
        finish(ExitCode.UNKNOWN)

    record = {
        "ring": ring.spec,
        "formula": format_formula(phi),
        "known": True,
        "truth_open": [str(g) for g in truth.value.generators],
    }
    pretty = [f"[[{format_formula(phi)}]] = {truth.value}"]
    if check:
        brute = brute_truth_open(ring, phi, env)
        agrees = equal(truth.value, brute)
        record["brute_force"] = [str(g) for g in brute.generators]
        record["agrees"] = agrees
        colour = "green" if agrees else "red"
        pretty.append(f"[{colour}]literal clauses give {brute}[/{colour}]")
        emit(request, record, pretty)
        finish(ExitCode.AFFIRMATIVE if agrees else ExitCode.NEGATIVE)
    emit(request, record, pretty)
    finish(ExitCode.AFFIRMATIVE)


@cli.command()
@ring_option()
@click.option("--at", "at", default="1", show_default=True, help="Element f of the judgement f |= phi")
@var_option
@click.option("--certificate", "with_certificate", is_flag=True, help="Emit a forcing certificate")
@click.argument("formula")
@format_option
@handle_errors
def force(ring_spec, at, bindings, with_certificate, formula, output):
    """Decide f |= phi.

    \b
    Exit codes: 0 forced, 1 not forced, 2 unknown, 3 malformed input.
    """
    request = CommandRequest(subcommand="force", ring=ring_spec, payload=[at, formula], output=output)
    ring = make_ring(ring_spec)
    f = ring.parse_element(at)
    env = parse_bindings(ring, bindings)
    phi = parse_formula(formula, variables=tuple(env), constants=_constants(ring))
    result = forces(ring, f, phi, env)
    verdict = result.verdict

    record = {
        "kind": "forcing",
        "ring": ring.spec,
        "element": str(f),
        "formula": format_formula(phi),
        "env": {k: str(v) for k, v in env.items()},
        "verdict": verdict.value,
    }
    pretty = [f"{f} |= {format_formula(phi)}: [bold]{verdict.value}[/bold]"]
    if isinstance(phi, Bottom) and result.nilpotency_exponent is not None:
        pretty.append(f"  {f}^{result.nilpotency_exponent} = 0")
        record["nilpotency_exponent"] = result.nilpotency_exponent
    if result.certificate is not None:
        if not verify_leq(result.certificate):
            raise CertificateError("Leq certificate does not verify", ring=ring.spec)
        pretty += [f"  {line}" for line in result.certificate.describe()]
    if verdict == Verdict.UNKNOWN and result.truth.unknown_reason:
        pretty.append(f"  [yellow]{result.truth.unknown_reason}[/yellow]")

    wants_certificate = with_certificate or verdict == Verdict.UNKNOWN
    if wants_certificate and verdict != Verdict.FALSE:
        certificate = None
        if classify(phi) == Fragment.FIRST_ORDER:
            if with_certificate:
                pretty.append("  [yellow]no forcing certificates for non-geometric formulas[/yellow]")
        else:
            try:
                certificate = certify_forcing(ring, f, phi, env)
            except UnsupportedRingError as e:
                logger.info(f"No forcing certificate: {e}")
        if certificate is not None:
            if not check_forcing_certificate(ring, f, phi, env, certificate):
                raise CertificateError("Forcing certificate does not verify", ring=ring.spec)
            record["certificate"] = certificate_to_record(certificate)
            if verdict == Verdict.UNKNOWN:
                verdict = Verdict.TRUE
                record["verdict"] = verdict.value
                pretty.append("  [green]forced, by a verified forcing certificate[/green]")
            pretty.append(escape(yaml.safe_dump(record["certificate"], sort_keys=False).rstrip()))

    emit(request, record, pretty)
    finish(
        {
            Verdict.TRUE: ExitCode.AFFIRMATIVE,
            Verdict.FALSE: ExitCode.NEGATIVE,
            Verdict.UNKNOWN: ExitCode.UNKNOWN,
        }[verdict]
    )


@cli.command("nabla-translate")
@ring_option(required=False)
@click.option("--beta", default=None, help="Answer symbol (default from SEMANTICS__BETA_SYMBOL)")
@click.option("--expand", is_flag=True, help="Print (phi => beta) => beta instead of nabla(phi)")
@click.argument("formula")
@format_option
@handle_errors
def nabla_translate_command(ring_spec, beta, expand, formula, output):
    """Translate a formula by the nabla translation."""
    request = CommandRequest(subcommand="nabla-translate", ring=ring_spec, payload=[formula], output=output)
    ring = make_ring(ring_spec) if ring_spec else None
    phi = parse_formula(formula, constants=_constants(ring))
    translated = nabla_translate(phi, beta)
    text = format_formula(translated, abbreviate=not expand)
    emit(
        request,
        {"formula": format_formula(phi), "translation": format_formula(translated)},
        [text],
    )
    finish(ExitCode.AFFIRMATIVE)


@cli.command("check-derivation")
@click.argument("derivation_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--axioms", "axioms_file", type=click.Path(exists=True, dir_okay=False), help="Axiom list")
@ring_option(required=False)
@click.option(
    "--prime-filter-axioms",
    is_flag=True,
    help="Add the prime-filter theory of the (finite) ring to the axioms",
)
@click.option(
    "--calculus",
    type=click.Choice([c.value for c in Calculus]),
    default=Calculus.INTUITIONISTIC.value,
    show_default=True,
)
@format_option
@handle_errors
def check_derivation_command(derivation_file, axioms_file, ring_spec, prime_filter_axioms, calculus, output):
    """Check a YAML derivation against the rules of the chosen calculus.

    \b
    Exit codes: 0 accepted, 1 rejected, 3 unreadable file.
    """
    request = CommandRequest(
        subcommand="check-derivation", ring=ring_spec, payload=[derivation_file], output=output
    )
    ring = make_ring(ring_spec) if ring_spec else None
    constants = _constants(ring)
    axioms = load_axioms(Path(axioms_file).read_text(), constants) if axioms_file else []
    if prime_filter_axioms:
        if ring is None:
            raise click.BadParameter("--prime-filter-axioms needs --ring")
        axioms += prime_filter_theory(ring)
    derivation = load_derivation(Path(derivation_file).read_text(), constants)
    result = check_derivation(axioms, derivation, Calculus(calculus))

    colour = "green" if result.ok else "red"
    emit(
        request,
        {"calculus": calculus, **result.model_dump()},
        [f"[{colour}]{escape(result.describe())}[/{colour}]"],
    )
    finish(ExitCode.AFFIRMATIVE if result.ok else ExitCode.NEGATIVE)


@cli.command()
@ring_option()
@click.option("--axioms", "axioms_file", type=click.Path(exists=True, dir_okay=False),
              help="Coherent theory to use instead of the prime-filter theory")
@click.option("--out", "out_file", type=click.Path(dir_okay=False), help="Write the derivation as YAML")
@click.argument("sequent")
@format_option
@handle_errors
def prove(ring_spec, axioms_file, out_file, sequent, output):
    """Prove a ground coherent sequent, by default in the prime-filter theory of Z/n.

    \b
    Exit codes: 0 proved (the derivation is checked before it is printed),
    1 not provable (a saturated branch missing the goal is shown),
    2 the ring has no finite prime-filter theory, 3 malformed input.
    """
    request = CommandRequest(subcommand="prove", ring=ring_spec, payload=[sequent], output=output)
    ring = make_ring(ring_spec)
    constants = _constants(ring)
    if axioms_file:
        theory = load_axioms(Path(axioms_file).read_text(), constants)
        prover = CoherentProver(theory)
        goal = parse_sequent(sequent, constants)
    else:
        theory = prime_filter_theory(ring)
        prover = prime_filter_prover(ring)
        goal = normalize_sequent(ring, parse_sequent(sequent, constants))
    result = prover.prove(goal)
    record = {"ring": ring.spec, "sequent": format_sequent(goal), "provable": result.provable}

    if not result.provable:
        branch = [format_formula(a) for a in result.failing_branch or []]
        record["failing_branch"] = branch
        emit(
            request,
            record,
            [
                f"[yellow]{escape(format_sequent(goal))} is not provable[/yellow]",
                f"  saturated branch: {escape(', '.join(branch))}",
            ],
        )
        finish(ExitCode.NEGATIVE)

    checked = check_derivation(theory, result.derivation, Calculus.GEOMETRIC)
    if not checked.ok:
        raise CertificateError(f"Prover output rejected: {checked.describe()}", ring=ring.spec)
    dumped = dump_derivation(result.derivation)
    if out_file:
        Path(out_file).write_text(dumped)
    record.update(steps=result.derivation.size(), leaves=result.leaves, derivation=out_file)
    pretty = [
        f"[green]Proved[/green] {escape(format_sequent(goal))} in {result.derivation.size()} steps"
        f" ({result.leaves} saturated branches)"
    ]
    pretty.append(f"  written to {escape(out_file)}" if out_file else escape(dumped.rstrip()))
    emit(request, record, pretty)
    finish(ExitCode.AFFIRMATIVE)


@cli.command()
@ring_option()
@format_option
@handle_errors
def filters(ring_spec, output):
    """List the prime filters (points of Spec) of Z/n."""
    request = CommandRequest(subcommand="filters", ring=ring_spec, output=output)
    ring = make_ring(ring_spec)
    found = enumerate_prime_filters(ring)
    if request.output == OutputFormat.STRUCTURED:
        emit(
            request,
            {
                "ring": ring.spec,
                "filters": [sorted(pf.carrier) for pf in found],
                "prime_ideals": [sorted(pf.prime_ideal) for pf in found],
            },
            [],
        )
        finish(ExitCode.AFFIRMATIVE)

    table = Table(title=f"Prime filters of {ring.spec}", box=box.ROUNDED)
    table.add_column("#", style="dim")
    table.add_column("Filter", style="cyan")
    table.add_column("Prime ideal", style="magenta")
    for k, pf in enumerate(found, start=1):
        table.add_row(str(k), str(pf), "{" + ", ".join(str(x) for x in sorted(pf.prime_ideal)) + "}")
    console.print(table)
    finish(ExitCode.AFFIRMATIVE)


def _matrix(ring: RingPresentation, text: str, cols: int | None) -> Matrix:
    return Matrix.parse(ring, text, cols)


@cli.command()
@ring_option()
@click.option("--cols", type=int, default=None, help="Column count for a matrix without rows")
@click.argument("matrix")
@format_option
@handle_errors
def mccoy(ring_spec, cols, matrix, output):
    """Is the ideal of maximal minors of MATRIX regular? Rows are separated by ';'.

    \b
    Exit codes: 0 regular, 1 an element annihilates the minors, 2 unsupported ring.
    """
    request = CommandRequest(subcommand="mccoy", ring=ring_spec, payload=[matrix], output=output)
    ring = make_ring(ring_spec)
    m = _matrix(ring, matrix, cols)
    report = mccoy_regularity(ring, m)
    if not report.verify():
        raise CertificateError("McCoy report does not verify", ring=ring.spec)

    record = {
        "ring": ring.spec,
        "matrix": str(m),
        "minors": [str(g) for g in report.minors.generators],
        "regular": report.regular,
        "injective": report.injective,
    }
    pretty = [f"Maximal minors of {m}: {report.minors}"]
    if report.regular:
        pretty.append("[green]regular[/green]: (0 : minors) = (0)")
    else:
        record.update(
            witness=str(report.witness),
            kernel_vector=[str(x) for x in report.kernel_vector],
            refused_vector=[str(x) for x in report.refused_vector] if report.refused_vector else None,
        )
        pretty.append(f"[yellow]not regular[/yellow]: {report.witness} annihilates the minors")
        pretty.append(f"  kernel vector {show(report.kernel_vector)}")
        if report.refused_vector:
            pretty.append(f"  unwound argument stopped at {show(report.refused_vector)}")
    if report.injective is not None:
        pretty.append(f"  injective by enumeration: {report.injective}")
    emit(request, record, pretty)
    finish(ExitCode.AFFIRMATIVE if report.regular else ExitCode.NEGATIVE)


@cli.command()
@ring_option()
@click.option("--cols", type=int, default=None, help="Column count for a matrix without rows")
@click.argument("matrix")
@format_option
@handle_errors
def richman(ring_spec, cols, matrix, output):
    """Run Richman's trivializer on a wide matrix, after checking its kernel.

    \b
    Exit codes: 0 a verified proof of 1 = 0, 1 the matrix has a kernel vector,
    2 the ring is not a reduced Z/n.
    """
    request = CommandRequest(subcommand="richman", ring=ring_spec, payload=[matrix], output=output)
    ring = make_ring(ring_spec)
    m = _matrix(ring, matrix, cols)
    outcome = richman_harness(ring, m)

    if outcome.certificate is None:
        emit(
            request,
            {"ring": ring.spec, "matrix": str(m), "injective": False,
             "kernel_vector": [str(x) for x in outcome.kernel_vector]},
            [f"[yellow]{m} is not injective[/yellow]: M * {show(outcome.kernel_vector)} = 0"],
        )
        finish(ExitCode.NEGATIVE)

    if not outcome.certificate.verify():
        raise CertificateError("Triviality certificate does not verify", ring=ring.spec)
    lines = outcome.certificate.describe()
    emit(
        request,
        {"ring": ring.spec, "matrix": str(m), "injective": True, "certificate": lines},
        ["[green]" + lines[0] + "[/green]"] + lines[1:],
    )
    finish(ExitCode.AFFIRMATIVE)


@cli.command("generic-freeness")
@ring_option()
@click.option("--generators", type=int, default=None, help="Generator count when there are no relations")
@click.argument("presentation", default="")
@format_option
@handle_errors
def generic_freeness(ring_spec, generators, presentation, output):
    """Find f with coker(PRESENTATION)[f^-1] free; relations are rows separated by ';'."""
    request = CommandRequest(
        subcommand="generic-freeness", ring=ring_spec, payload=[presentation], output=output
    )
    ring = make_ring(ring_spec)
    m = _matrix(ring, presentation, generators)
    result = generic_freeness_simple(ring, m)
    if not verify_freeness(result):
        raise CertificateError("Freeness claim does not verify", ring=ring.spec)

    if result.certificate is not None:
        lines = result.certificate.describe()
        emit(request, {"ring": ring.spec, "trivial": True, "certificate": lines}, lines)
        finish(ExitCode.AFFIRMATIVE)

    names = [f"e{k + 1}" for k in result.basis]
    emit(
        request,
        {
            "ring": ring.spec,
            "presentation": str(m),
            "element": str(result.element),
            "localized_ring": result.localized_ring.spec,
            "rank": result.rank,
            "basis": names,
        },
        [
            f"coker {m} becomes free of rank {result.rank} over "
            f"{ring.spec}[{result.element}^-1] = {result.localized_ring.spec}",
            f"  basis: {', '.join(names) or '(empty)'}",
        ],
    )
    finish(ExitCode.AFFIRMATIVE)


@cli.command()
@click.option("--suite", "suites", multiple=True, help="Run only these suites (repeatable)")
@format_option
@handle_errors
def selftest(suites, output):
    """Run the oracle-equivalence suites; exit 0 iff every check passes."""
    request = CommandRequest(subcommand="selftest", payload=list(suites), output=output)
    runner = SelftestRunner(settings)
    stats = runner.run(list(suites) or None)
    passed = all(s.success for s in stats)

    if request.output == OutputFormat.STRUCTURED:
        for s in stats:
            emit(request, {"suite": s.name, "success": s.success, "checks": s.checks,
                           "failures": s.failures[:20], "error": s.error_message,
                           "seconds": round(s.execution_time_seconds, 3)}, [])
        finish(ExitCode.AFFIRMATIVE if passed else ExitCode.NEGATIVE)

    table = Table(title="Selftest", box=box.ROUNDED)
    table.add_column("Suite", style="cyan")
    table.add_column("Checks", justify="right")
    table.add_column("Failures", justify="right")
    table.add_column("Time (s)", justify="right")
    table.add_column("Status")
    for s in stats:
        status = "[green]pass[/green]" if s.success else "[red]FAIL[/red]"
        table.add_row(s.name, f"{s.checks:,}", str(len(s.failures)), f"{s.execution_time_seconds:.1f}", status)
    console.print(table)
    for s in stats:
        for line in ([s.error_message] if s.error_message else []) + s.failures[:5]:
            console.print(f"[red]{s.name}:[/red] {escape(line)}", highlight=False)

    console.print(
        Panel(
            f"[bold]Suites:[/bold] {len(stats)}\n"
            f"[bold]Checks:[/bold] {sum(s.checks for s in stats):,}\n"
            f"[bold]Failed suites:[/bold] {sum(not s.success for s in stats)}",
            title="[green]All passed[/green]" if passed else "[red]Failures[/red]",
            border_style="green" if passed else "red",
            box=box.ROUNDED,
        )
    )
    finish(ExitCode.AFFIRMATIVE if passed else ExitCode.NEGATIVE)


def _verify_record(record: dict) -> tuple[bool, str]:
    """Re-verify a structured certificate record; (ok, description)."""
    kind = record.get("kind")
    if kind == "membership":
        ring, ideal, certificate = CertificateRecord(**record).restore()
        ok = verify_membership(ring, ideal, certificate.element, certificate)
        return ok, certificate.describe(ideal)
    if kind == "leq":
        ring = make_ring(record["ring"])
        lower = Open.generated_by(ring, [ring.parse_element(g) for g in record["lower"]])
        upper = Open.generated_by(ring, [ring.parse_element(g) for g in record["upper"]])
        certificates = [CertificateRecord(**c).restore()[2] for c in record["certificates"]]
        certificate = LeqCertificate(lower=lower, upper=upper, certificates=certificates)
        return verify_leq(certificate), f"{lower} <= {upper}"
    if kind == "forcing":
        ring = make_ring(record["ring"])
        env = {k: ring.parse_element(str(v)) for k, v in (record.get("env") or {}).items()}
        phi = parse_formula(record["formula"], variables=tuple(env), constants=_constants(ring))
        f = ring.parse_element(str(record["element"]))
        if "certificate" not in record:
            raise click.BadParameter("Forcing record carries no certificate")
        certificate = certificate_from_record(ring, record["certificate"])
        return check_forcing_certificate(ring, f, phi, env, certificate), f"{f} |= {format_formula(phi)}"
    raise click.BadParameter(f"Unknown certificate kind {kind!r}")


@cli.command("verify-certificate")
@click.argument("certificate_file", type=click.Path(exists=True, dir_okay=False))
@format_option
@handle_errors
def verify_certificate(certificate_file, output):
    """Re-verify a structured certificate (membership, leq or forcing record).

    Accepts the JSON lines printed with --format structured, or the same
    record written as YAML.

    \b
    Exit codes: 0 verifies, 1 does not verify, 3 unreadable record.
    """
    request = CommandRequest(subcommand="verify-certificate", payload=[certificate_file], output=output)
    text = Path(certificate_file).read_text()
    try:
        records = [json.loads(line) for line in text.splitlines() if line.strip()]
    except json.JSONDecodeError:
        records = [yaml.safe_load(text)]
    if not records or not all(isinstance(r, dict) for r in records):
        raise click.BadParameter("Expected one certificate record per line")

    all_ok = True
    for record in records:
        ok, description = _verify_record(record)
        all_ok = all_ok and ok
        colour = "green" if ok else "red"
        emit(
            request,
            {"kind": record.get("kind"), "verified": ok, "claim": description},
            [f"[{colour}]{'verified' if ok else 'does not verify'}[/{colour}]: {description}"],
        )
    finish(ExitCode.AFFIRMATIVE if all_ok else ExitCode.NEGATIVE)


if __name__ == "__main__":
    cli()
