"""
Tests de integración del orquestador: trabajos completos de extremo a extremo.
"""
import json

import pytest

from src.application.job_orchestrator import JobOrchestrator
from src.cli.models import JobSpec, Report
from src.domain.errors import InfiniteMilnorNumber, TamenessUnverified
from src.infrastructure.command_steps import MilnorStep


class TestFullPipeline:

    def setup_method(self):
        """Configurar antes de cada test"""
        self.orchestrator = JobOrchestrator()

    def _job(self, command: str, polynomial: str = "x^3 - y^2", variables=("x", "y"), **kwargs) -> JobSpec:
        return JobSpec(command=command, polynomial=polynomial, variables=list(variables), **kwargs)

    def test_report_cusp(self):
        """Test del informe completo de x^3 - y^2"""
        report = self.orchestrator.run(self._job("report"))

        assert report.passed
        assert report.error is None
        assert set(report.payloads) == {
            "milnor", "koszul", "fibers", "freeness", "brieskorn", "pairing", "spectrum", "predict"
        }
        assert report.step_results["consistency"]["status"] == "completed"
        names = {check.name for check in report.cross_checks}
        assert {"kouchnirenko-mu", "pole-order", "connection-eigenvalues", "rank-vs-lattice"} <= names

    def test_report_skips_steps(self):
        """Test de report sobre f no casi homogéneo: pasos omitidos, no errores"""
        report = self.orchestrator.run(self._job("report", "x^2*y + x"))

        assert report.error is None
        assert report.step_results["brieskorn"]["status"] == "skipped"
        assert report.step_results["spectrum"]["status"] == "skipped"

    def test_single_command_raises(self):
        """Test de un comando simple: la precondición se propaga"""
        with pytest.raises(InfiniteMilnorNumber):
            self.orchestrator.run(self._job("milnor", "x*y*z", ("x", "y", "z")))
        with pytest.raises(TamenessUnverified):
            self.orchestrator.run(self._job("brieskorn", "x^2*y + x"))

    def test_assume_tame_override(self):
        """Test de --assume-tame en brieskorn"""
        report = self.orchestrator.run(self._job("brieskorn", "x^2*y + x", assume_tame=True))
        assert report.payloads["brieskorn"]["rank"] == 0

    def test_run_safe_records_error(self):
        """Test de run_safe: el error queda en el informe"""
        report = self.orchestrator.run_safe(self._job("milnor", "x*y*z", ("x", "y", "z")))

        assert not report.passed
        assert report.error["type"] == "InfiniteMilnorNumber"
        assert report.payloads == {}

    def test_run_many_keeps_order(self):
        """Test de ejecución concurrente con orden estable"""
        jobs = [self._job("milnor", f"x^{d}", ("x",)) for d in range(2, 7)]
        reports = self.orchestrator.run_many(jobs)

        assert [r.payloads["milnor"]["mu"] for r in reports] == [1, 2, 3, 4, 5]

    def test_custom_steps(self):
        """Test de inyección de pasos"""
        orchestrator = JobOrchestrator(steps={"milnor": [MilnorStep()]})
        with pytest.raises(ValueError):
            orchestrator.run(self._job("koszul"))

    def test_report_is_deterministic(self):
        """Test de determinismo: dos ejecuciones difieren solo en la marca temporal"""
        job = self._job("report")
        first = json.loads(self.orchestrator.run(job).model_dump_json())
        second = json.loads(self.orchestrator.run(job).model_dump_json())
        first.pop("generated_at")
        second.pop("generated_at")
        assert json.dumps(first, sort_keys=False) == json.dumps(second, sort_keys=False)

    def test_report_json_round_trip(self):
        """Test de serialización pydantic del informe"""
        report = self.orchestrator.run(self._job("spectrum"))
        restored = Report.model_validate_json(report.model_dump_json())

        assert restored == report
        assert restored.conventions.spectrum_shift == "0"
