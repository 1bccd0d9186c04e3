# Command-line framework
import click

from config import config
from grasskt.commands import apply_budget, budget_options, output_options, write_report
from grasskt.services.chern_service import cohomology_report
from grasskt.services.errors import InvalidParameters, NotFinitelyGenerated
from grasskt.services.exactmath_service import IntMatrix, smith_normal_form, cokernel_group
from grasskt.services.poly_service import name_key, parse_polynomial
from grasskt.services.zgb_service import ORDERS, IdealPresentation, quotient_group_structure, q_dimension, strong_groebner
from grasskt.utils.report_manager import Report


@click.command("cohomology")
@click.option("--n", type=int, required=True)
@click.option("--k", type=int, required=True)
@output_options
def cohomology(n, k, fmt, out, timing):
    """Rational even cohomology P_{n,k}: dimension, basis and Chern-character surjectivity."""
    report = Report("cohomology", {"n": n, "k": k})
    result = cohomology_report(n, k)
    result["pass"] = result["surjective"]
    report.add(result)
    write_report(report, fmt, out)


@click.command("gb")
@click.argument("polynomials", nargs=-1, required=True)
@click.option("--vars", "variables", default=None,
              help="Comma-separated variable order (default: all variables, natural order).")
@click.option("--order", type=click.Choice(ORDERS), default=config.DEFAULT_ORDER, show_default=True)
@click.option("--ring", type=click.Choice(["ZZ", "QQ"]), default="ZZ", show_default=True)
@budget_options
@output_options
def gb(polynomials, variables, order, ring, budget_ms, max_steps, fmt, out, timing):
    """
    Gröbner basis of the ideal generated by POLYNOMIALS and the group of the quotient.

    Example: grasskt gb "x^2" "x*y" "y^2" "2*x"
    """
    apply_budget(budget_ms, max_steps)
    generators = [parse_polynomial(text) for text in polynomials]
    if variables:
        names = tuple(v.strip() for v in variables.split(",") if v.strip())
    else:
        names = tuple(sorted({v for g in generators for v in g.variables()}, key=name_key))
    ideal = IdealPresentation(names, generators, order, ring)
    basis = strong_groebner(ideal)
    result = {"ideal": list(polynomials), **basis.to_json()}
    try:
        if ring == "ZZ":
            quotient = quotient_group_structure(basis)
            result["quotient"] = {"generators": [str(m) for m in quotient.monomial_generators],
                                  **quotient.group.to_json()}
        else:
            result["quotient"] = {"dimension": q_dimension(ideal)}
    except NotFinitelyGenerated as e:
        result["quotient"] = None
        result["note"] = str(e)
    report = Report("gb", {"order": order, "ring": ring, "variables": list(names)})
    report.add(result)
    write_report(report, fmt, out)


def parse_matrix(text: str) -> IntMatrix:
    """Rows separated by ';', entries by ','."""
    try:
        rows = [[int(x) for x in row.split(",")] for row in text.split(";") if row.strip()]
    except ValueError:
        raise InvalidParameters(f"cannot read integer matrix {text!r}; use rows like 'a,b;c,d'")
    if not rows:
        raise InvalidParameters("empty matrix")
    return IntMatrix.from_rows(rows)


@click.command("snf")
@click.argument("matrix")
@output_options
def snf(matrix, fmt, out, timing):
    """Smith normal form of MATRIX (rows "a,b;c,d") and the group ℤ^cols / rows."""
    A = parse_matrix(matrix)
    decomposition = smith_normal_form(A)
    result = {
        "matrix": A.to_rows(),
        "invariant_factors": list(decomposition.invariant_factors),
        "S": decomposition.S.to_rows(),
        "cokernel": cokernel_group(A, A.cols).to_json(),
    }
    report = Report("snf", {"rows": A.rows, "cols": A.cols})
    report.add(result)
    write_report(report, fmt, out)
