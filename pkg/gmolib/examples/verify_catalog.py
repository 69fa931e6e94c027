import sys
from gmolib.cli.report import ReportDocument
from gmolib.harness.records import summary_line
from gmolib.harness.verify import Harness, crosscheck_laplace
from gmolib.quad.base import QuadConfig


def main(out_file, tol, n_jobs):
    """
        Args:
            out_file: report file; .csv or .json
            tol: quadrature tolerance
            n_jobs: int: parallel jobs
    """
    cfg = QuadConfig(abs_tol=tol, rel_tol=tol)
    harness = Harness(cfg, n_jobs=n_jobs)
    records = harness.verify_all()
    records += crosscheck_laplace(cfg=cfg)
    fmt = 'json' if out_file.endswith('.json') else 'csv'
    ReportDocument(records, cfg).write(out_file, fmt)
    print(summary_line(records))


if __name__ == '__main__':
    out_file = sys.argv[1]
    tol = float(sys.argv[2]) if len(sys.argv) > 2 else 1e-12
    n_jobs = int(sys.argv[3]) if len(sys.argv) > 3 else 1
    main(out_file, tol, n_jobs)
