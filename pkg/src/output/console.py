"""Console-based output handler for GAFSV."""

from typing import TYPE_CHECKING, Any

from rich.console import Console
from rich.table import Table

if TYPE_CHECKING:
    from src.experiments.ablation import AblationRow
    from src.verification.report import EvalReport, MarginReport


def _fmt(value: float | None, digits: int = 4) -> str:
    return "n/a" if value is None else f"{value:.{digits}f}"


class ConsoleOutputHandler:
    """Rich Console-based output handler; errors go to a separate stderr console."""

    def __init__(self, console: Console | None = None, err_console: Console | None = None) -> None:
        self.console = console or Console()
        self.err_console = err_console or Console(stderr=True)

    def print(self, message: str, **kwargs: Any) -> None:
        """Print an informational message."""
        self.console.print(message, **kwargs)

    def info(self, message: str) -> None:
        """Print an informational message."""
        self.print(message)

    def warning(self, message: str) -> None:
        """Print a warning message."""
        self.print(f"[yellow]Warning:[/yellow] {message}")

    def error(self, message: str) -> None:
        """Print a one-line error on standard error."""
        self.err_console.print(f"Error: {message}", markup=False, highlight=False, soft_wrap=True)

    def print_config(self, title: str, values: dict[str, str]) -> None:
        table = Table(title=title)
        table.add_column("Key", style="cyan", no_wrap=True)
        table.add_column("Value", style="green")
        for key, value in values.items():
            table.add_row(key, value)
        self.console.print(table)

    def print_eval_report(self, report: "EvalReport") -> None:
        """Summary of pooled EERs and margins, plus one row per writer."""
        summary = Table(title=f"Verification (R_enroll = {report.enroll})")
        summary.add_column("Condition", style="cyan")
        summary.add_column("EER", style="magenta")
        summary.add_column("Threshold", style="green")
        summary.add_row("skilled", _fmt(report.sf_eer), _fmt(report.tau_sf))
        summary.add_row("random", _fmt(report.rf_eer), _fmt(report.tau_rf))
        self.console.print(summary)
        self.console.print(
            f"mu_g = {_fmt(report.mu_g)}  mu_f = {_fmt(report.mu_f)}  delta = {_fmt(report.delta)}"
        )

        writers = Table(title="Per writer")
        writers.add_column("Writer", style="cyan", no_wrap=True)
        writers.add_column("Queries")
        writers.add_column("Forgeries")
        writers.add_column("sf EER", style="magenta")
        writers.add_column("delta", style="green")
        for row in report.per_writer:
            writers.add_row(row.writer_id, str(row.queries), str(row.forgeries), _fmt(row.sf_eer), _fmt(row.delta))
        self.console.print(writers)

    def print_margins(self, report: "MarginReport") -> None:
        table = Table(title=f"Embedding margins ({report.split} split, step {report.step})")
        table.add_column("Writer", style="cyan", no_wrap=True)
        table.add_column("mu_g", style="green")
        table.add_column("mu_f", style="yellow")
        table.add_column("delta", style="magenta")
        for row in report.per_writer:
            table.add_row(row.writer_id, _fmt(row.mu_g), _fmt(row.mu_f), _fmt(row.delta))
        table.add_row("pooled", _fmt(report.mu_g), _fmt(report.mu_f), _fmt(report.delta), style="bold")
        self.console.print(table)

    def print_ablation(self, rows: "list[AblationRow]") -> None:
        table = Table(title="Ablation")
        table.add_column("Configuration", style="cyan", no_wrap=True)
        table.add_column("sf EER", style="magenta")
        table.add_column("rf EER", style="green")
        table.add_column("delta", style="yellow")
        for row in rows:
            table.add_row(row.name, _fmt(row.sf_eer), _fmt(row.rf_eer), _fmt(row.delta))
        self.console.print(table)
