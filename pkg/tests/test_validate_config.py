import io
import os
import unittest
from contextlib import redirect_stdout
from unittest import mock

import validate_config
from core.settings import RuntimeSettings
from engines.fpt_settings import FptSettings
from engines.triples_settings import TriplesSettings
from oracle.oracle_settings import OracleSettings


def _check(environ):
    with redirect_stdout(io.StringIO()) as out:
        code = validate_config.main(environ)
    return code, out.getvalue()


class ValidateConfigTests(unittest.TestCase):
    def test_defaults_are_valid(self):
        code, out = _check({})
        self.assertEqual(code, 0)
        self.assertIn("MC1P_ORACLE_CAP: using default (9)", out)

    def test_invalid_values_fail(self):
        for name, value in (
            ("MC1P_ORACLE_CAP", "0"),
            ("MC1P_FPT_WORKERS", "many"),
            ("MC1P_TRIPLES_STRICT", "maybe"),
            ("LOG_LEVEL", "LOUD"),
        ):
            with self.subTest(name=name):
                self.assertEqual(_check({name: value})[0], 1)

    def test_set_values_are_echoed(self):
        code, out = _check({"LOG_LEVEL": "debug", "MC1P_FPT_COLLECT_ALL": "TRUE"})
        self.assertEqual(code, 0)
        self.assertIn("LOG_LEVEL: DEBUG", out)
        self.assertIn("MC1P_FPT_COLLECT_ALL: True", out)


class SettingsTests(unittest.TestCase):
    def test_settings_read_the_environment(self):
        environ = {
            "LOG_LEVEL": "debug",
            "MC1P_ORACLE_CAP": "7",
            "MC1P_ORACLE_REQUIRE_COVER": "false",
            "MC1P_FPT_WORKERS": "4",
            "MC1P_FPT_COLLECT_ALL": "true",
            "MC1P_TRIPLES_STRICT": "false",
        }
        with mock.patch.dict(os.environ, environ):
            self.assertEqual(RuntimeSettings().resolved_level(), "DEBUG")
            self.assertEqual(OracleSettings(), OracleSettings(cap=7, require_cover=False))
            self.assertEqual(FptSettings(), FptSettings(workers=4, collect_all=True))
            self.assertFalse(TriplesSettings().strict)

    def test_defaults(self):
        names = [
            "MC1P_ORACLE_CAP", "MC1P_ORACLE_REQUIRE_COVER", "MC1P_FPT_WORKERS",
            "MC1P_FPT_COLLECT_ALL", "MC1P_TRIPLES_STRICT",
        ]
        with mock.patch.dict(os.environ, {}, clear=False):
            for name in names:
                os.environ.pop(name, None)
            self.assertEqual(OracleSettings(), OracleSettings(cap=9, require_cover=True))
            self.assertEqual(FptSettings(), FptSettings(workers=1, collect_all=False))
            self.assertTrue(TriplesSettings().strict)


if __name__ == "__main__":
    unittest.main()
