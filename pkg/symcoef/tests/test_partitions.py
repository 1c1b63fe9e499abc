# symcoef/tests/test_partitions.py
from django.test import SimpleTestCase

from symcoef.exceptions import ArgumentError
from symcoef.partitions import (
    Partition,
    centralizer_order,
    conjugate,
    contains,
    enumerate_partitions,
    format_partition,
    hardy_ramanujan_ratio,
    hat_transform,
    log_concavity_holds,
    meet_join,
    multiset_union,
    parse_partition,
    partition_count,
    staircase,
    sub_partitions,
)


class PartitionTextTests(SimpleTestCase):
    def test_parse_forms(self):
        self.assertEqual(parse_partition('3,2,1'), Partition([3, 2, 1]))
        self.assertEqual(parse_partition('[3,2,1]'), Partition([3, 2, 1]))
        self.assertEqual(parse_partition('4^2,1^3'), Partition([4, 4, 1, 1, 1]))
        self.assertEqual(parse_partition('[]'), Partition())
        # 並びは自由
        self.assertEqual(parse_partition('1,3,2'), Partition([3, 2, 1]))

    def test_parse_rejects_garbage(self):
        for text in ('3,a', '3,,1', '0,1', '-1'):
            with self.subTest(text=text):
                with self.assertRaises(ArgumentError):
                    parse_partition(text)

    def test_format(self):
        self.assertEqual(format_partition(Partition([3, 2, 1])), '3,2,1')
        self.assertEqual(format_partition(Partition()), '[]')
        self.assertEqual(str(parse_partition(format_partition([5, 5, 2]))), '5,5,2')

    def test_constructor_validates(self):
        with self.assertRaises(ArgumentError):
            Partition([1, 2])
        self.assertEqual(Partition([2, 1, 0, 0]), Partition([2, 1]))


class EnumerationTests(SimpleTestCase):
    def test_small_cases(self):
        self.assertEqual(enumerate_partitions(0), (Partition(),))
        self.assertEqual(
            list(enumerate_partitions(4)),
            [Partition(p) for p in ([4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1])],
        )
        self.assertEqual(len(enumerate_partitions(6)), 11)

    def test_partition_count(self):
        self.assertEqual(partition_count(1), 1)
        self.assertEqual(partition_count(20), 627)
        for n in range(15):
            self.assertEqual(partition_count(n), len(enumerate_partitions(n)))

    def test_hardy_ramanujan_band(self):
        for n in (200, 500, 1000):
            self.assertTrue(0.85 <= hardy_ramanujan_ratio(n) <= 1.0)

    def test_log_concavity_reversed_direction(self):
        # p(n)² ≥ p(n−1)p(n+1) は n ≥ 26 で成り立ち、小さい奇数 n で崩れる
        for n in range(26, 201):
            with self.subTest(n=n):
                self.assertTrue(log_concavity_holds(n))
        self.assertFalse(log_concavity_holds(25))

    def test_log_concavity_wider_steps(self):
        for n in range(3, 101):
            for k in range(2, n):
                with self.subTest(n=n, k=k):
                    self.assertTrue(log_concavity_holds(n, k))


class OperationTests(SimpleTestCase):
    def test_centralizer(self):
        self.assertEqual(centralizer_order([1, 1, 1]), 6)
        self.assertEqual(centralizer_order([3]), 3)
        self.assertEqual(centralizer_order([2, 1]), 2)

    def test_conjugate(self):
        self.assertEqual(conjugate([3, 1]), Partition([2, 1, 1]))
        self.assertEqual(conjugate([2, 2]), Partition([2, 2]))
        self.assertEqual(conjugate([]), Partition())

    def test_meet_join(self):
        self.assertEqual(meet_join([3, 1], [2, 2]), (Partition([2, 1]), Partition([3, 2])))
        self.assertEqual(meet_join([3], [1, 1, 1]), (Partition([1]), Partition([3, 1, 1])))

    def test_union_and_containment(self):
        self.assertEqual(multiset_union([2, 1], [2]), Partition([2, 2, 1]))
        self.assertEqual(multiset_union([], [3, 1]), Partition([3, 1]))
        self.assertTrue(contains([1], [2, 1]))
        self.assertFalse(contains([2, 2], [3, 1]))
        self.assertTrue(contains([], [4, 2]))

    def test_hat_transform(self):
        self.assertEqual(hat_transform([3, 2, 1]), Partition([1] * 6))
        self.assertEqual(hat_transform([5, 4, 3, 2]), Partition([3, 2] + [1] * 9))
        self.assertEqual(hat_transform([1]), Partition([1]))

    def test_staircase(self):
        self.assertEqual(staircase(4), Partition([3, 2, 1]))
        self.assertEqual(staircase(1), Partition())

    def test_sub_partitions(self):
        subs = list(sub_partitions([2, 1]))
        self.assertEqual(set(subs), {Partition(p) for p in ([], [1], [2], [1, 1], [2, 1])})
        self.assertEqual(list(sub_partitions([3, 2, 1], sizes=(3,))),
                         [Partition([3]), Partition([2, 1]), Partition([1, 1, 1])])
