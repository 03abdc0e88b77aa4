"""
Tests del CLI: códigos de salida, salida JSON y validación contra el esquema.
"""
import json

import pytest
from jsonschema import Draft202012Validator

from config.settings import REPORT_SCHEMA_PATH
from src.cli.main import EXIT_CHECK_FAILED, EXIT_INPUT, EXIT_OK, build_parser, job_from_args, main
from src.cli.models import CorpusReport, Report
from src.domain.errors import SocleNotOneDimensional


@pytest.fixture(scope="module")
def validator():
    with open(REPORT_SCHEMA_PATH, encoding="utf-8") as handle:
        schema = json.load(handle)
    Draft202012Validator.check_schema(schema)
    return Draft202012Validator(schema)


def read_json(path):
    with open(path, encoding="utf-8") as handle:
        return json.load(handle)


class TestExitCodes:

    def test_report_ok(self, tmp_path, validator, capsys):
        """Test de report sobre x^3 - y^2 con salida JSON válida"""
        output = tmp_path / "cusp.json"
        code = main(["report", "--poly", "x^3 - y^2", "--vars", "x,y", "--json", str(output)])

        assert code == EXIT_OK
        payload = read_json(output)
        validator.validate(payload)
        assert payload["passed"] is True
        assert payload["payloads"]["milnor"]["mu"] == 2
        assert "Comprobaciones cruzadas" in capsys.readouterr().out

    @pytest.mark.parametrize("argv", [
        ["milnor", "--poly", "x^3 +", "--vars", "x"],
        ["milnor", "--poly", "x^2^3", "--vars", "x"],
        ["milnor", "--poly", "x + z", "--vars", "x,y"],
        ["milnor", "--poly", "x^2", "--vars", "x,x"],
        ["milnor", "--vars", "x"],
        ["fibers", "--poly", "x^2", "--vars", "x", "--deg-ladder", "2,4"],
        ["brieskorn", "--poly", "x^2", "--vars", "x", "--trunc-u", "1"],
        ["predict", "--hypersurface", "2"],
    ])
    def test_malformed_input(self, argv):
        """Test de entradas mal formadas: código 2"""
        assert main(argv) == EXIT_INPUT

    def test_unknown_variable_position(self, capsys):
        """Test del mensaje de variable desconocida"""
        assert main(["milnor", "--poly", "x + z", "--vars", "x,y"]) == EXIT_INPUT
        assert "z" in capsys.readouterr().err

    def test_infinite_milnor(self, tmp_path, validator):
        """Test de xyz: precondición no satisfecha, informe de error válido"""
        output = tmp_path / "xyz.json"
        code = main(["milnor", "--poly", "x*y*z", "--vars", "x,y,z", "--json", str(output)])

        assert code == 3
        payload = read_json(output)
        validator.validate(payload)
        assert payload["error"]["type"] == "InfiniteMilnorNumber"
        assert payload["passed"] is False

    def test_tameness_required(self):
        """Test de brieskorn sin certificado de mansedumbre"""
        assert main(["brieskorn", "--poly", "x^2*y + x", "--vars", "x,y"]) == 3
        assert main(["brieskorn", "--poly", "x^2*y + x", "--vars", "x,y", "--assume-tame"]) == EXIT_OK

    def test_invariant_breach(self, monkeypatch, capsys):
        """Test de un invariante interno violado: código 4 y testigo en stderr"""

        def broken(self, job):
            raise SocleNotOneDimensional("zócalo de dimensión 2", {"socle": ["x", "y"]})

        monkeypatch.setattr("src.cli.main.JobOrchestrator.run", broken)
        assert main(["milnor", "--poly", "x^2", "--vars", "x"]) == 4
        assert '"socle"' in capsys.readouterr().err

    def test_hypersurface_prediction(self, tmp_path, validator):
        """Test de predict --hypersurface 2,3"""
        output = tmp_path / "cubic.json"
        assert main(["predict", "--hypersurface", "2,3", "--json", str(output)]) == EXIT_OK
        payload = read_json(output)
        validator.validate(payload)
        assert payload["payloads"]["predict"]["ranks"] == {"2": 1, "3": 2, "4": 1}


class TestCorpusCommand:

    def test_corpus_ok(self, tmp_path, validator):
        """Test de un corpus pequeño que pasa"""
        corpus = tmp_path / "corpus.txt"
        corpus.write_text(
            "# corpus de prueba\n"
            "A1 | x^2 | x | mu=1 tame=tame-certified qh=yes\n"
            "\n"
            "cusp | x^3 - y^2 | x,y | mu=2 qh=yes\n",
            encoding="utf-8",
        )
        output = tmp_path / "corpus.json"
        assert main(["corpus", str(corpus), "--json", str(output)]) == EXIT_OK
        payload = read_json(output)
        validator.validate(payload)
        report = CorpusReport.model_validate(payload)
        assert [row.name for row in report.rows] == ["A1", "cusp"]

    def test_corpus_failed_expectation(self, tmp_path):
        """Test de una expectativa incumplida: código 1"""
        corpus = tmp_path / "corpus.txt"
        corpus.write_text("A1 | x^2 | x | mu=5\n", encoding="utf-8")
        assert main(["corpus", str(corpus)]) == EXIT_CHECK_FAILED

    @pytest.mark.parametrize("content", [
        "A1 | x^2\n",
        "A1 | x^2 | x | mu\n",
        "A1 | x^2 | x | colour=red\n",
        "A1 | x^2 | x | mu=uno\n",
    ])
    def test_corpus_malformed(self, tmp_path, content):
        """Test de corpus mal formado: código 2"""
        corpus = tmp_path / "corpus.txt"
        corpus.write_text(content, encoding="utf-8")
        assert main(["corpus", str(corpus)]) == EXIT_INPUT

    def test_missing_corpus(self, tmp_path):
        """Test de fichero de corpus inexistente"""
        assert main(["corpus", str(tmp_path / "nada.txt")]) == EXIT_INPUT


class TestParser:

    def test_job_from_args(self):
        """Test de construcción del trabajo"""
        args = build_parser().parse_args(
            ["fibers", "--poly", "x^2", "--vars", "x", "--deg-ladder", "2,4,6", "--samples", "0,1/2", "--seed", "3"]
        )
        job = job_from_args(args)

        assert job.degree_ladder == [2, 4, 6]
        assert job.u_samples == ["0", "1/2"]
        assert job.seed == 3

    def test_bad_rational_sample(self):
        """Test de muestra no racional: argparse sale con código 2"""
        with pytest.raises(SystemExit) as excinfo:
            build_parser().parse_args(["fibers", "--poly", "x", "--vars", "x", "--samples", "0,pi"])
        assert excinfo.value.code == 2

    def test_report_model_round_trip(self, tmp_path):
        """Test de Report.model_validate_json sobre la salida del CLI"""
        output = tmp_path / "a2.json"
        assert main(["spectrum", "--poly", "x^3", "--vars", "x", "--json", str(output)]) == EXIT_OK
        report = Report.model_validate_json(output.read_text(encoding="utf-8"))
        assert report.payloads["spectrum"]["eigenvalues"] == ["1/3", "2/3"]
