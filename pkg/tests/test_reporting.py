import tempfile
import unittest
from fractions import Fraction
from pathlib import Path
from unittest import mock

from reporting import Discrepancy, FileDiscrepancyLog, MemoryDiscrepancyLog, ReportingSettings


class FileDiscrepancyLogTests(unittest.TestCase):
    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self._tmp.cleanup)
        self.path = Path(self._tmp.name) / "sweeps" / "discrepancies.log"

    def test_records_are_appended_and_read_back(self):
        log = FileDiscrepancyLog(path=str(self.path))
        entries = [Discrepancy("abc", 2, 3), Discrepancy("def", Fraction(1, 2), 1)]
        for entry in entries:
            log.record(entry)
        self.assertEqual(self.path.read_text(encoding="utf-8"), "abc 2 3\ndef 1/2 1\n")
        self.assertEqual(log.entries(), entries)

    def test_touch_leaves_an_empty_log(self):
        log = FileDiscrepancyLog(path=str(self.path))
        self.assertEqual(log.entries(), [])
        log.touch()
        self.assertTrue(self.path.exists())
        self.assertEqual(log.entries(), [])

    def test_malformed_lines_are_skipped(self):
        self.path.parent.mkdir(parents=True)
        self.path.write_text("abc 2 3\nnot a discrepancy line\n", encoding="utf-8")
        with self.assertLogs("reporting.file_log", level="WARNING"):
            entries = FileDiscrepancyLog(path=str(self.path)).entries()
        self.assertEqual(entries, [Discrepancy("abc", 2, 3)])

    def test_path_comes_from_the_environment(self):
        with mock.patch.dict("os.environ", {"MC1P_DISCREPANCY_LOG": str(self.path)}):
            log = FileDiscrepancyLog(ReportingSettings())
        self.assertEqual(log.path, self.path)


class MemoryDiscrepancyLogTests(unittest.TestCase):
    def test_keeps_entries_in_order(self):
        log = MemoryDiscrepancyLog()
        log.record(Discrepancy("b", 1, 2))
        log.record(Discrepancy("a", 0, 1))
        self.assertEqual([e.digest for e in log.entries()], ["b", "a"])


if __name__ == "__main__":
    unittest.main()
