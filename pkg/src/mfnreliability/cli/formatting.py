"""
Representación en tabla de los informes de la CLI.
"""

from typing import List

import pandas as pd

from ..models.network import Network
from ..schemas.report import RunReport


def _number(value: float) -> str:
    return f"{value:.12g}"


def vector_table(vectors: List[List[int]], network: Network, prefix: str = "X") -> str:
    """
    Tabla con una fila por vector y una columna por arco.

    Args:
        vectors (List[List[int]]): Vectores de estado.
        network (Network): Red, para los nombres de columna.
        prefix (str): Prefijo de las etiquetas de fila.

    Returns:
        str: Tabla alineada.
    """
    frame = pd.DataFrame(
        vectors,
        columns=[arc.id for arc in network.arcs],
        index=[f"{prefix}{k}" for k in range(1, len(vectors) + 1)],
    )
    return frame.to_string()


def paths_table(report: RunReport) -> str:
    frame = pd.DataFrame(
        [
            {"j": row.index, "arcs": " ".join(row.arcs), "LP_j": row.length, "CP_j(M)": row.capacity}
            for row in report.paths or []
        ],
        columns=["j", "arcs", "LP_j", "CP_j(M)"],
    )
    return frame.to_string(index=False)


def _demand_line(report: RunReport) -> str:
    return f"d = {report.d}, lambda = {report.distance_limit}"


def _dlmp_lines(report: RunReport, network: Network) -> List[str]:
    lines = [_demand_line(report)]
    if report.dlmps:
        lines.append(f"{len(report.dlmps)} (d,lambda)-MPs:")
        lines.append(vector_table(report.dlmps, network))
    else:
        lines.append("No (d,lambda)-MPs: the demand cannot be met within the distance limit.")
    counters = (
        f"sigma = {report.sigma}, rejected_cyclic = {report.rejected_cyclic}, "
        f"duplicates = {report.duplicates}"
    )
    if report.recovered_cyclic:
        counters += f", recovered_cyclic = {report.recovered_cyclic}"
    if report.elapsed_ms is not None:
        counters += f", elapsed = {report.elapsed_ms:.3f} ms"
    lines.append(counters)
    return lines


def render_table(report: RunReport, network: Network) -> str:
    """
    Texto legible para cada subcomando; los mismos datos que el JSON.

    Args:
        report (RunReport): Informe de la ejecución.
        network (Network): Red evaluada.

    Returns:
        str: Texto listo para la salida estándar.
    """
    lines: List[str] = []
    if report.command == "mps":
        lines.append(f"{len(report.paths or [])} minimal paths:")
        lines.append(paths_table(report))
        if report.arcs_on_no_path:
            lines.append(f"Arcs on no minimal path: {', '.join(report.arcs_on_no_path)}")
        return "\n".join(lines)

    if report.dlmps is not None:
        lines.extend(_dlmp_lines(report, network))
    else:
        lines.append(_demand_line(report))
    if report.reliability is not None:
        lines.append(
            f"R_(d,lambda) = {_number(report.reliability)} "
            f"({report.term_count} terms, {report.method})"
        )
    if report.oracle is not None:
        oracle = report.oracle
        lines.append(f"Oracle: {oracle.psi_count} of {oracle.state_count} states in Psi")
        if oracle.minimal_vectors:
            lines.append(vector_table(oracle.minimal_vectors, network, prefix="Y"))
        if oracle.reliability is not None:
            lines.append(f"Oracle R_(d,lambda) = {_number(oracle.reliability)}")
    if report.verify is not None:
        verify = report.verify
        lines.append(f"Sets equal: {'yes' if verify.sets_equal else 'no'}")
        if verify.missing:
            lines.append(f"Missing: {verify.missing}")
        if verify.extra:
            lines.append(f"Extra: {verify.extra}")
        if verify.reliability_delta is not None:
            lines.append(f"Reliability delta: {verify.reliability_delta:.3e}")
        lines.append("PASS" if verify.passed else "FAIL")
    return "\n".join(lines)
