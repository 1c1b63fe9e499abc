# symcoef/tests/test_characters.py
import tempfile

from django.test import SimpleTestCase, override_settings

from symcoef import characters
from symcoef.characters import (
    cache_path,
    character_table,
    character_value,
    column_orthogonality_holds,
    load_table,
    row_orthogonality_holds,
    save_table,
)
from symcoef.exceptions import ArgumentError, ResourceLimitError
from symcoef.partitions import conjugate


class CharacterValueTests(SimpleTestCase):
    def test_small_values(self):
        self.assertEqual(character_value([2, 1], [1, 1, 1]), 2)
        self.assertEqual(character_value([1, 1, 1], [2, 1]), -1)
        self.assertEqual(character_value([2, 1], [3]), -1)

    def test_size_mismatch(self):
        with self.assertRaises(ArgumentError):
            character_value([2, 1], [2])


class CharacterTableTests(SimpleTestCase):
    def test_tiny_tables(self):
        self.assertEqual(character_table(1).value([1], [1]), 1)
        self.assertEqual(list(character_table(3).dimensions), [1, 2, 1])

    def test_burnside_at_identity(self):
        table = character_table(5)
        self.assertEqual(sum(int(f) ** 2 for f in table.dimensions), 120)

    def test_orthogonality(self):
        for n in range(1, 8):
            table = character_table(n)
            self.assertTrue(row_orthogonality_holds(table))
            self.assertTrue(column_orthogonality_holds(table))

    def test_conjugate_row_is_sign_twisted(self):
        for n in range(1, 11):
            table = character_table(n)
            for lam in table.partitions:
                lam_t = conjugate(lam)
                for alpha in table.partitions:
                    sign = (-1) ** (n - len(alpha))
                    self.assertEqual(table.value(lam_t, alpha), sign * table.value(lam, alpha), (lam, alpha))

    @override_settings(SYMCOEF={'CHAR_TABLE_CAP': 4})
    def test_cap(self):
        with self.assertRaises(ResourceLimitError):
            character_table(5)

    def test_threads_do_not_change_the_table(self):
        characters.clear_memory_cache()
        single = character_table(6, threads=1).matrix.tolist()
        characters.clear_memory_cache()
        pooled = character_table(6, threads=2).matrix.tolist()
        self.assertEqual(single, pooled)


class DiskCacheTests(SimpleTestCase):
    def test_round_trip_and_broken_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            table = character_table(4)
            save_table(tmp, table)
            loaded = load_table(tmp, 4)
            self.assertEqual(loaded.matrix.tolist(), table.matrix.tolist())

            cache_path(tmp, 4).write_text('CHARTABLE v0 n=4\n', encoding='utf-8')
            with self.assertLogs('symcoef.characters', level='WARNING'):
                self.assertIsNone(load_table(tmp, 4))

    def test_missing_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            self.assertIsNone(load_table(tmp, 3))

    def test_cache_dir_from_settings(self):
        with tempfile.TemporaryDirectory() as tmp:
            characters.clear_memory_cache()
            with override_settings(SYMCOEF={'CACHE_DIR': tmp}):
                character_table(5)
            self.assertTrue(cache_path(tmp, 5).exists())
