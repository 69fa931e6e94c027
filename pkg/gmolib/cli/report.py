"""
Reports of a verification run: text table, CSV and JSON
"""

import csv
import datetime
import io
import json
from ..harness.records import FIELDS, NUMERIC_FIELDS, summary_line


TOOL_VERSION = '0.1.0'


def _number(value):
    return '%.17g' % value


class ReportDocument(object):
    """
    A verification run with its provenance

    Parameters:
    -----------
    records: list of VerificationRecord
        in output order
    config: QuadConfig
        configuration of the run
    """

    def __init__(self, records, config):
        self.tool_version = TOOL_VERSION
        self.timestamp = datetime.datetime.now(
            datetime.timezone.utc).isoformat()
        self.config = config
        self.records = records

    def rows(self):
        return [record.to_dict() for record in self.records]

    def to_dict(self):
        return {'tool_version': self.tool_version,
                'timestamp': self.timestamp,
                'config': self.config.to_dict(),
                'records': self.rows()}

    def to_json(self):
        return json.dumps(self.to_dict(), indent=4, ensure_ascii=False)

    def to_csv(self):
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=FIELDS, lineterminator='\n')
        writer.writeheader()
        for row in self.rows():
            for key in NUMERIC_FIELDS:
                row[key] = _number(row[key])
            writer.writerow(row)
        return buf.getvalue()

    def to_table(self):
        header = "{:<22} {:<26} {:>24} {:>24} {:>10} {:>7}  {:<14} {}".format(
            'case_id', 'params', 'lhs', 'rhs', 'abs_diff', 'tol', 'status',
            'note')
        lines = [header, '-' * len(header)]
        for r in self.records:
            lines.append(
                "{:<22} {:<26} {:>24.16g} {:>24.16g} {:>10.3g} {:>7.0e}  "
                "{:<14} {}".format(r.id, str(r.params), r.lhs.real,
                                   r.rhs.real, r.abs_diff, r.tol,
                                   str(r.status), r.note))
        lines.append(summary_line(self.records))
        return "\n".join(lines) + "\n"

    def render(self, fmt):
        if fmt == 'csv':
            return self.to_csv()
        if fmt == 'json':
            return self.to_json() + "\n"
        return self.to_table()

    def write(self, fname, fmt):
        with open(fname, 'w', encoding='utf-8', newline='') as outfile:
            outfile.write(self.render(fmt))

    def __repr__(self):
        return "tool_version: {}, timestamp: {}, records: {}".format(
            self.tool_version, self.timestamp, len(self.records))


def catalog_table(catalog):
    """One row per catalog entry: id, strategy, tier, domain, defaults,
    citation and anchor"""
    lines = []
    for entry in catalog.values():
        lines.append("{:<18} {:<19} {:<9} {:<40} {:<22} {}".format(
            str(entry.id), str(entry.strategy), str(entry.tier),
            entry.domain, str(entry.default_params) or '-', entry.reference))
    return "\n".join(lines) + "\n"
