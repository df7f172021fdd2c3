"""Static HTML dashboard of suite runs and stored findings."""

from datetime import datetime, timezone
from html import escape
from pathlib import Path

from .config import SUITES, data_dir
from .database import get_findings, get_runs


def default_report_path() -> Path:
    return data_dir() / "report.html"


def _suite_card(key: str, db_path: Path | None) -> str:
    config = SUITES[key]
    runs = get_runs(key, db_path=db_path)
    if not runs:
        status, body = "idle", '<div class="card-line">never run</div>'
    else:
        last = runs[0]
        failed = last.counterexamples and config.tier == "lemma"
        status = "fail" if failed else ("finding" if last.counterexamples else "pass")
        body = (
            f'<div class="card-line">n &le; {last.n_max} &middot; {escape(last.filter)}</div>'
            f'<div class="card-line">{last.graphs_tested} graphs &middot; '
            f"{last.counterexamples} counterexamples &middot; {last.elapsed_ms / 1000:.1f}s</div>"
        )
    return (
        f'<div class="card {status}">'
        f'<div class="card-key">{escape(key)} <span class="tier">{config.tier}</span></div>'
        f'<div class="card-name">{escape(config.name)}</div>{body}</div>'
    )


def generate_report(report_path: Path | None = None, db_path: Path | None = None) -> Path:
    """Write the dashboard and return its path."""
    out = report_path or default_report_path()
    out.parent.mkdir(parents=True, exist_ok=True)

    findings = get_findings(db_path=db_path)
    now_str = datetime.now(timezone.utc).strftime("%Y-%m-%d %H:%M UTC")
    cards_html = "\n".join(_suite_card(key, db_path) for key in SUITES)

    if findings:
        rows = []
        for finding in findings:
            reason = finding.detail_dict.get("reason", "")
            found = finding.discovered_at.strftime("%b %d") if finding.discovered_at else ""
            rows.append(
                "<tr>"
                f"<td>{escape(finding.suite)}</td>"
                f"<td><code>{escape(finding.graph6)}</code></td>"
                f"<td>{escape(reason)}</td>"
                f"<td>{found}</td>"
                f"<td>{'yes' if finding.reviewed else 'no'}</td>"
                "</tr>"
            )
        table_html = f"""
        <table>
            <thead>
                <tr><th>Suite</th><th>graph6</th><th>Reason</th><th>Found</th><th>Reviewed</th></tr>
            </thead>
            <tbody>
                {"".join(rows)}
            </tbody>
        </table>"""
    else:
        table_html = '<p class="empty">No counterexamples recorded.</p>'

    html = f"""<!DOCTYPE html>
<html lang="en">
<head>
    <meta charset="UTF-8">
    <title>PerfectLab Dashboard</title>
    <style>
        body {{
            font-family: -apple-system, BlinkMacSystemFont, "Segoe UI", Roboto, sans-serif;
            background: #fafaf7;
            color: #1f2933;
            margin: 0;
            padding: 2rem 1rem;
        }}
        header, .suites, section {{ max-width: 1000px; margin: 0 auto 2rem; }}
        h1 {{ font-size: 1.4rem; margin: 0; }}
        .meta {{ font-size: 0.8rem; color: #7b8794; }}
        .suites {{ display: grid; grid-template-columns: repeat(auto-fill, minmax(230px, 1fr)); gap: 0.8rem; }}
        .card {{ border: 1px solid #d9e2ec; border-left-width: 5px; border-radius: 6px; padding: 0.8rem; background: #fff; }}
        .card.pass {{ border-left-color: #3ebd93; }}
        .card.fail {{ border-left-color: #e12d39; }}
        .card.finding {{ border-left-color: #f0b429; }}
        .card.idle {{ border-left-color: #bcccdc; }}
        .card-key {{ font-weight: 600; }}
        .tier {{ font-size: 0.7rem; color: #7b8794; text-transform: uppercase; }}
        .card-name {{ font-size: 0.8rem; margin: 0.3rem 0; }}
        .card-line {{ font-size: 0.75rem; color: #52606d; }}
        h2 {{ font-size: 0.9rem; text-transform: uppercase; color: #52606d; }}
        table {{ width: 100%; border-collapse: collapse; font-size: 0.85rem; }}
        th, td {{ text-align: left; padding: 0.5rem; border-bottom: 1px solid #e4e7eb; }}
        code {{ font-size: 0.8rem; }}
        .empty {{ color: #7b8794; }}
    </style>
</head>
<body>
    <header>
        <h1>PerfectLab Dashboard</h1>
        <span class="meta">Updated {now_str} &middot; {len(findings)} findings stored</span>
    </header>

    <div class="suites">
        {cards_html}
    </div>

    <section>
        <h2>Findings</h2>
        {table_html}
    </section>
</body>
</html>"""

    out.write_text(html, encoding="utf-8")
    return out
