# symcoef/management/commands/symcoef.py
"""
symcoef のバッチ CLI。

    python manage.py symcoef lr 3,2,1 2,1 2,1
    python manage.py symcoef table cnk --n-max 18 --format csv
    python manage.py symcoef verify burnside --n-max 12

終了コード: 0 成功 / 1 検証失敗 / 2 入力エラー / 3 上限超過
"""
import argparse
import csv
import json
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional

from django.core.management.base import BaseCommand, CommandError
from django.core.serializers.json import DjangoJSONEncoder

from symcoef import conf
from symcoef.dimensions import dim_irrep, max_dim
from symcoef.exceptions import ArgumentError, ResourceLimitError, VerificationError
from symcoef.extremal import lr_bounds_report, max_lr, table_cnk, table_checks
from symcoef.forms import (
    BoundsForm,
    DimForm,
    ScanForm,
    ShapeForm,
    SkewForm,
    TableForm,
    TripleForm,
    VerifyForm,
)
from symcoef.kronecker import kron_bounds_report, kronecker
from symcoef.lr import lr_coefficient, lr_coefficient_hive
from symcoef.partitions import Partition, format_partition
from symcoef.shapes import (
    constants,
    curve_samples,
    hook_integral_curve,
    hook_integral_partition,
    vkls_curve,
    vkls_distance,
    vkls_partition,
    zero_curve,
)
from symcoef.skew import SkewShape, skew_bounds_report, skew_syt_count
from symcoef.suites import run_scan, run_suite

logger = logging.getLogger("symcoef")

FORMATS = ("text", "csv", "json")
# scan の n を省略したときの値
SCAN_DEFAULTS = {
    "containment": 12,
    "stabilization": 5,
    "saxl": 5,
    "zeta-rho": 12,
    "non-unimodal": 12,
    "plancherel-triples": 8,
    "regev": 3,
}


@dataclass
class RunConfig:
    command: str
    format: str = "text"
    cache_dir: Optional[str] = None
    threads: int = 1
    stretch: bool = False
    time_budget: Optional[float] = None

    @classmethod
    def from_options(cls, options: Dict[str, Any]) -> "RunConfig":
        threads = options.get("threads") or conf.default_threads()
        if threads < 1:
            raise ArgumentError(f"threads must be positive: {threads}")
        return cls(
            command=options["action"],
            format=options.get("format") or "text",
            cache_dir=options.get("cache_dir"),
            threads=threads,
            stretch=bool(options.get("stretch")),
            time_budget=options.get("time_budget"),
        )


def _cell(value: Any) -> Any:
    """出力用の正規化。分割は正規テキスト、実数は有効 6 桁"""
    if isinstance(value, Partition):
        return format_partition(value)
    if isinstance(value, tuple) and value and all(isinstance(v, Partition) for v in value):
        return " ".join(format_partition(v) for v in value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, float):
        if math.isinf(value) or math.isnan(value):
            return str(value)
        return f"{value:.6g}"
    return value


class Command(BaseCommand):
    help = "対称群の係数（次元・Kronecker・LR・歪 SYT）の計算と検証"

    def add_arguments(self, parser):
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument("--format", choices=FORMATS, default="text")
        common.add_argument("--cache-dir", dest="cache_dir", default=None)
        common.add_argument("--threads", type=int, default=None)
        common.add_argument("--stretch", action="store_true")
        common.add_argument("--time-budget", dest="time_budget", type=float, default=None)

        sub = parser.add_subparsers(dest="action", required=True)

        p = sub.add_parser("dim", parents=[common])
        p.add_argument("lam")

        p = sub.add_parser("skew", parents=[common])
        p.add_argument("outer")
        p.add_argument("inner", nargs="?", default="")

        for name in ("kron", "lr"):
            p = sub.add_parser(name, parents=[common])
            p.add_argument("lam")
            p.add_argument("mu")
            p.add_argument("nu")
        p.add_argument("--backend", choices=("lr", "hive"), default="lr")

        p = sub.add_parser("table", parents=[common])
        p.add_argument("table")
        p.add_argument("--n-max", dest="n_max", type=int, required=True)
        p.add_argument("--check", action="store_true")

        p = sub.add_parser("verify", parents=[common])
        p.add_argument("suite")
        p.add_argument("--n-max", dest="n_max", type=int, default=6)

        p = sub.add_parser("scan", parents=[common])
        p.add_argument("name")
        p.add_argument("n", nargs="?", type=int, default=None)

        p = sub.add_parser("bounds", parents=[common])
        p.add_argument("target")
        p.add_argument("n", type=int)
        p.add_argument("k", nargs="?", type=int, default=None)

        p = sub.add_parser("shape", parents=[common])
        p.add_argument("what")
        p.add_argument("--n", type=int, default=None)
        p.add_argument("--points", type=int, default=None)
        p.add_argument("--grid", type=int, default=None)

    # ===== 入口 =====
    def handle(self, *args, **options):
        verbosity = options.get("verbosity", 1)
        if verbosity >= 3:
            logger.setLevel(logging.DEBUG)
        elif verbosity >= 2:
            logger.setLevel(logging.INFO)
        try:
            cfg = RunConfig.from_options(options)
            handler = getattr(self, "_do_" + cfg.command)
            with conf.overrides(CACHE_DIR=cfg.cache_dir, THREADS=cfg.threads):
                rows, failure = handler(cfg, options)
            self._emit(cfg, rows)
        except ArgumentError as exc:
            raise CommandError(str(exc), returncode=2)
        except ResourceLimitError as exc:
            raise CommandError(str(exc), returncode=3)
        except VerificationError as exc:
            witness = f" (witness: {self._witness_text(exc.witness)})" if exc.witness is not None else ""
            raise CommandError(f"{exc}{witness}", returncode=1)
        if failure:
            raise CommandError(failure, returncode=1)

    def _form(self, form_class, data):
        form = form_class(data)
        if not form.is_valid():
            messages = "; ".join(f"{k}: {' '.join(v)}" for k, v in form.errors.items())
            raise CommandError(messages, returncode=2)
        return form.cleaned_data

    @staticmethod
    def _witness_text(witness) -> str:
        if isinstance(witness, Partition):
            return format_partition(witness)
        if isinstance(witness, tuple):
            return " ".join(format_partition(w) if isinstance(w, Partition) else str(w) for w in witness)
        return str(witness)

    # ===== 出力 =====
    def _emit(self, cfg: RunConfig, rows: List[Dict[str, Any]]) -> None:
        rows = [{k: _cell(v) for k, v in row.items()} for row in rows]
        if cfg.format == "json":
            self.stdout.write(json.dumps(rows, cls=DjangoJSONEncoder, ensure_ascii=False, indent=2))
            return
        columns: List[str] = []
        for row in rows:
            columns.extend(k for k in row if k not in columns)
        if cfg.format == "csv":
            writer = csv.DictWriter(self.stdout, fieldnames=columns, lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
            return
        # text: 値 1 つならそれだけ、他は表
        if len(rows) == 1 and "value" in rows[0]:
            self.stdout.write(str(rows[0]["value"]))
            return
        self.stdout.write("\t".join(columns))
        for row in rows:
            self.stdout.write("\t".join("" if row.get(c) is None else str(row.get(c)) for c in columns))

    # ===== 単発 =====
    def _do_dim(self, cfg, options):
        data = self._form(DimForm, {"lam": options["lam"]})
        return [{"lambda": data["lam"], "value": dim_irrep(data["lam"])}], None

    def _do_skew(self, cfg, options):
        data = self._form(SkewForm, {"outer": options["outer"], "inner": options["inner"]})
        shape = SkewShape(data["outer"], data["inner"] or Partition())
        return [{"outer": shape.outer, "inner": shape.inner, "value": skew_syt_count(shape)}], None

    def _triple(self, options, mode):
        data = self._form(TripleForm, {
            "lam": options["lam"], "mu": options["mu"], "nu": options["nu"], "mode": mode,
        })
        return data["lam"], data["mu"], data["nu"]

    def _do_kron(self, cfg, options):
        lam, mu, nu = self._triple(options, "kron")
        return [{"lambda": lam, "mu": mu, "nu": nu, "value": kronecker(lam, mu, nu)}], None

    def _do_lr(self, cfg, options):
        lam, mu, nu = self._triple(options, "lr")
        backend = options.get("backend", "lr")
        value = lr_coefficient_hive(lam, mu, nu) if backend == "hive" else lr_coefficient(lam, mu, nu)
        return [{"lambda": lam, "mu": mu, "nu": nu, "value": value}], None

    # ===== 表 =====
    def _do_table(self, cfg, options):
        data = self._form(TableForm, {"table": options["table"], "n_max": options["n_max"]})
        n_max = data["n_max"]
        if data["table"] == "dn":
            rows = []
            for n in range(1, n_max + 1):
                record = max_dim(n, cfg.threads)
                rows.append({"n": n, "D": record.value, "lambda": record.witness[0]})
            return rows, None
        if data["table"] == "cn":
            rows = []
            for n in range(1, n_max + 1):
                record = max_lr(n, cfg.stretch, cfg.threads)
                lam, mu, nu = record.witness
                rows.append({"n": n, "C": record.value, "lambda": lam, "mu": mu, "nu": nu})
            return rows, None
        table = table_cnk(n_max, cfg.stretch, cfg.threads, cfg.time_budget)
        rows = []
        for n in range(1, n_max + 1):
            for k in range(n + 1):
                lam, mu, nu = table.record(n, k).witness
                rows.append({"n": n, "k": k, "C": table.value(n, k), "lambda": lam, "mu": mu, "nu": nu})
        failure = None
        if options.get("check"):
            report = table_checks(table)
            if not report.passed:
                label, witness = report.failures[0]
                failure = f"{label} fails at {witness}"
        return rows, failure

    # ===== 検証・走査 =====
    def _do_verify(self, cfg, options):
        data = self._form(VerifyForm, {"suite": options["suite"], "n_max": options["n_max"]})
        report = run_suite(data["suite"], data["n_max"])
        return [{"suite": report.name, "checked": report.checked, "failures": len(report.failures)}], None

    def _do_scan(self, cfg, options):
        name = options["name"]
        n = options["n"] if options["n"] is not None else SCAN_DEFAULTS.get(name, 1)
        data = self._form(ScanForm, {"name": name, "n": n})
        return run_scan(data["name"], data["n"], cfg.stretch), None

    def _do_bounds(self, cfg, options):
        data = self._form(BoundsForm, {"target": options["target"], "n": options["n"], "k": options["k"]})
        target, n, k = data["target"], data["n"], data["k"]
        if target == "kron":
            report = kron_bounds_report(n, cfg.threads)
        elif target == "skew":
            report = skew_bounds_report(n, k)
        else:
            report = lr_bounds_report(n, k)
        rows = [
            {
                "subject": report.subject,
                "exact": report.exact_value,
                "check": check.name,
                "log_value": check.log_value,
                "log_lower": check.log_lower,
                "log_upper": check.log_upper,
                "asserted": check.asserted,
                "passed": check.passed,
            }
            for check in report.checks
        ]
        for note in report.notes:
            logger.warning("%s: %s", report.subject, note)
        failure = None if report.passed else f"bounds for {report.subject} fail"
        return rows, failure

    # ===== 極限形状 =====
    def _do_shape(self, cfg, options):
        data = self._form(ShapeForm, {
            "what": options["what"], "n": options["n"], "points": options["points"], "grid": options["grid"],
        })
        what = data["what"]
        if what == "constants":
            c = constants()
            return [{"name": name, "value": getattr(c, name)} for name in ("c1", "c2", "d", "K")], None
        if what == "curve":
            samples = curve_samples(vkls_curve(), data["points"] or 201)
            return [{"u": u, "psi": v} for u, v in samples], None
        n = data["n"] or 10000
        lam = vkls_partition(n)
        grid = data["grid"] or 1000
        return [{
            "n": n,
            "upsilon_partition": hook_integral_partition(lam),
            "vkls_distance": vkls_distance(lam),
            "upsilon_curve": hook_integral_curve(vkls_curve(), zero_curve(), grid),
        }], None
