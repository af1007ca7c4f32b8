"""Line-oriented text format for certificates and reports.

Every value is a decimal integer or an exact num/den fraction, so
parse(serialize(c)) == c bit for bit. Writers emit a canonical field order;
the parser accepts the fields in any order but rejects unknown or duplicate
keys. Poly certificates embed their inner point certificate as a two-space
indented block after an "inner:" line.
"""

from __future__ import annotations

from fractions import Fraction

from .arith import CongruenceClass
from .chain import Chain, TargetPoint
from .errors import CertificateFormatError
from .lab import DiscrepancyReport
from .lift import CERTIFICATE_VERSION, Certificate, WitnessPoint
from .poly import MonicPolynomial, PolyCertificate

POINT_KIND = "point-certificate"
POLY_KIND = "poly-certificate"
REPORT_KIND = "discrepancy-report"


def _frac(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _frac_list(values) -> str:
    return ",".join(_frac(q) for q in values)


def _int_list(values) -> str:
    return ",".join(str(v) for v in values)


def serialize_certificate(cert: Certificate) -> str:
    lines = [
        f"version: {cert.version}",
        f"kind: {POINT_KIND}",
        f"mode: {cert.mode}",
        f"primality: {cert.primality_method}",
        f"target: {_frac_list(cert.target.coords)}",
        f"eps: {_frac(cert.eps)}",
        f"chain: {_int_list(cert.chain.a)}",
        f"congruence-residue: {cert.congruence.residue}",
        f"congruence-modulus: {cert.congruence.modulus}",
        f"prime-floor: {cert.prime_floor}",
        f"p: {cert.witness.p}",
        f"witness: {_int_list(cert.witness.x)}",
        f"errors: {_frac_list(cert.errors)}",
        f"max-error: {_frac(cert.max_error)}",
    ]
    return "\n".join(lines) + "\n"


def serialize_poly_certificate(cert: PolyCertificate) -> str:
    lines = [
        f"version: {CERTIFICATE_VERSION}",
        f"kind: {POLY_KIND}",
        f"degree: {cert.f.degree}",
        f"coeffs: {_int_list(cert.f.coeffs)}",
        f"alphas: {_frac_list(cert.alphas.coords)}",
        f"eps: {_frac(cert.eps)}",
        f"root-precision: {_frac(cert.root_precision)}",
        f"root-targets: {_frac_list(cert.root_targets.coords)}",
        f"values: {_frac_list(cert.values)}",
        f"errors: {_frac_list(cert.errors)}",
        "inner:",
    ]
    lines += ["  " + line for line in serialize_certificate(cert.inner).splitlines()]
    return "\n".join(lines) + "\n"


def serialize_report(report: DiscrepancyReport) -> str:
    lines = [
        f"version: {CERTIFICATE_VERSION}",
        f"kind: {REPORT_KIND}",
        f"p: {report.p}",
        f"n: {report.n}",
        f"k: {report.k}",
        f"total: {report.total}",
        f"counts: {_int_list(report.counts)}",
        f"sup-deviation: {_frac(report.sup_deviation)}",
        f"mean-abs-deviation: {_frac(report.mean_abs_deviation)}",
    ]
    return "\n".join(lines) + "\n"


def _split_block(lines: list) -> tuple[dict, list | None]:
    fields: dict[str, str] = {}
    inner: list | None = None
    i = 0
    while i < len(lines):
        line = lines[i]
        if line == "inner:":
            if inner is not None:
                raise CertificateFormatError("duplicate inner block")
            inner = []
            i += 1
            while i < len(lines) and lines[i].startswith("  "):
                inner.append(lines[i][2:])
                i += 1
            continue
        key, sep, value = line.partition(": ")
        if not sep or not key:
            raise CertificateFormatError(f"malformed line: {line!r}")
        if key in fields:
            raise CertificateFormatError(f"duplicate field: {key}")
        fields[key] = value
        i += 1
    return fields, inner


def _take(fields: dict, key: str) -> str:
    try:
        return fields.pop(key)
    except KeyError:
        raise CertificateFormatError(f"missing field: {key}") from None


def _parse_int(text: str, key: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise CertificateFormatError(f"field {key}: not an integer: {text!r}") from None


def _parse_frac(text: str, key: str) -> Fraction:
    num, sep, den = text.partition("/")
    if not sep:
        raise CertificateFormatError(f"field {key}: expected num/den, got {text!r}")
    try:
        return Fraction(int(num), int(den))
    except (ValueError, ZeroDivisionError):
        raise CertificateFormatError(f"field {key}: bad fraction {text!r}") from None


def _parse_int_list(text: str, key: str) -> tuple[int, ...]:
    return tuple(_parse_int(part, key) for part in text.split(","))


def _parse_frac_list(text: str, key: str) -> tuple[Fraction, ...]:
    return tuple(_parse_frac(part, key) for part in text.split(","))


def _finish(fields: dict, kind: str) -> None:
    if fields:
        raise CertificateFormatError(
            f"unexpected fields in {kind}: {', '.join(sorted(fields))}"
        )


def _check_version(fields: dict) -> int:
    version = _parse_int(_take(fields, "version"), "version")
    if version != CERTIFICATE_VERSION:
        raise CertificateFormatError(f"unsupported version: {version}")
    return version


def _build_certificate(fields: dict) -> Certificate:
    version = _check_version(fields)
    try:
        return Certificate(
            target=TargetPoint(_parse_frac_list(_take(fields, "target"), "target")),
            eps=_parse_frac(_take(fields, "eps"), "eps"),
            chain=Chain(_parse_int_list(_take(fields, "chain"), "chain")),
            congruence=CongruenceClass(
                _parse_int(_take(fields, "congruence-residue"), "congruence-residue"),
                _parse_int(_take(fields, "congruence-modulus"), "congruence-modulus"),
            ),
            prime_floor=_parse_int(_take(fields, "prime-floor"), "prime-floor"),
            witness=WitnessPoint(
                _parse_int(_take(fields, "p"), "p"),
                _parse_int_list(_take(fields, "witness"), "witness"),
            ),
            errors=_parse_frac_list(_take(fields, "errors"), "errors"),
            max_error=_parse_frac(_take(fields, "max-error"), "max-error"),
            primality_method=_take(fields, "primality"),
            mode=_take(fields, "mode"),
            version=version,
        )
    except ValueError as exc:
        raise CertificateFormatError(str(exc)) from None


def _build_poly_certificate(fields: dict, inner_lines: list | None) -> PolyCertificate:
    _check_version(fields)
    if inner_lines is None:
        raise CertificateFormatError("poly certificate lacks the inner block")
    inner_fields, nested = _split_block(inner_lines)
    if nested is not None:
        raise CertificateFormatError("unexpected nested inner block")
    if _take(inner_fields, "kind") != POINT_KIND:
        raise CertificateFormatError("inner block is not a point certificate")
    inner = _build_certificate(inner_fields)
    _finish(inner_fields, "inner certificate")
    try:
        return PolyCertificate(
            f=MonicPolynomial(
                _parse_int(_take(fields, "degree"), "degree"),
                _parse_int_list(_take(fields, "coeffs"), "coeffs"),
            ),
            alphas=TargetPoint(_parse_frac_list(_take(fields, "alphas"), "alphas")),
            eps=_parse_frac(_take(fields, "eps"), "eps"),
            root_targets=TargetPoint(
                _parse_frac_list(_take(fields, "root-targets"), "root-targets")
            ),
            root_precision=_parse_frac(
                _take(fields, "root-precision"), "root-precision"
            ),
            inner=inner,
            values=_parse_frac_list(_take(fields, "values"), "values"),
            errors=_parse_frac_list(_take(fields, "errors"), "errors"),
        )
    except ValueError as exc:
        raise CertificateFormatError(str(exc)) from None


def _build_report(fields: dict) -> DiscrepancyReport:
    _check_version(fields)
    try:
        return DiscrepancyReport(
            p=_parse_int(_take(fields, "p"), "p"),
            n=_parse_int(_take(fields, "n"), "n"),
            k=_parse_int(_take(fields, "k"), "k"),
            total=_parse_int(_take(fields, "total"), "total"),
            counts=_parse_int_list(_take(fields, "counts"), "counts"),
            sup_deviation=_parse_frac(_take(fields, "sup-deviation"), "sup-deviation"),
            mean_abs_deviation=_parse_frac(
                _take(fields, "mean-abs-deviation"), "mean-abs-deviation"
            ),
        )
    except ValueError as exc:
        raise CertificateFormatError(str(exc)) from None


def parse_document(text: str):
    """Parse a serialized document; returns a Certificate, PolyCertificate or
    DiscrepancyReport depending on its kind field."""
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise CertificateFormatError("empty document")
    fields, inner_lines = _split_block(lines)
    kind = _take(fields, "kind")
    if kind == POINT_KIND:
        if inner_lines is not None:
            raise CertificateFormatError("point certificate with an inner block")
        result = _build_certificate(fields)
    elif kind == POLY_KIND:
        result = _build_poly_certificate(fields, inner_lines)
    elif kind == REPORT_KIND:
        if inner_lines is not None:
            raise CertificateFormatError("report with an inner block")
        result = _build_report(fields)
    else:
        raise CertificateFormatError(f"unknown kind: {kind!r}")
    _finish(fields, kind)
    return result


def parse_certificate(text: str):
    """Parse a certificate document (point or poly); rejects reports."""
    result = parse_document(text)
    if isinstance(result, DiscrepancyReport):
        raise CertificateFormatError("document is a report, not a certificate")
    return result
