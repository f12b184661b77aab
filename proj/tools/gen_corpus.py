#!/usr/bin/env python3
"""Writes the evaluation corpus: 56 base C programs, each as a correct
version plus an obvious and a subtle faulty variant.

Layout: <variant>/<category>/<name>.c
"""

import argparse
import pathlib
import sys

# name -> (category, source, obvious (old, new), subtle (old, new))
PROGRAMS = {}


def program(category, name, source, obvious, subtle):
    PROGRAMS[name] = (category, source.strip("\n") + "\n", obvious, subtle)


# basic

program("basic", "abs_value", r"""
#include <stdio.h>

int abs_value(int x) {
    if (x < 0) {
        return -x;
    } else {
        return x;
    }
}

int main(void) {
    printf("%d\n", abs_value(-7));
    printf("%d\n", abs_value(3));
    return 0;
}
""", ("return -x;", "return x;"), ("x < 0", "x < -1"))

program("basic", "max_of_two", r"""
#include <stdio.h>

int max_of_two(int a, int b) {
    if (a > b) {
        return a;
    } else {
        return b;
    }
}

int main(void) {
    printf("max = %d\n", max_of_two(4, 9));
    return 0;
}
""", ("a > b", "a < b"), ("a > b", "a >= b + 1"))

program("basic", "min_of_three", r"""
#include <stdio.h>

int min_of_three(int a, int b, int c) {
    int m = a;
    if (b < m) {
        m = b;
    }
    if (c < m) {
        m = c;
    }
    return m;
}

int main(void) {
    printf("%d\n", min_of_three(5, 2, 8));
    return 0;
}
""", ("if (c < m)", "if (c > m)"), ("if (b < m)", "if (b < m - 1)"))

program("basic", "sum_array", r"""
#include <stdio.h>

int sum_array(int a[], int n) {
    int s = 0;
    for (int i = 0; i < n; i++) {
        s += a[i];
    }
    return s;
}

int main(void) {
    int a[5] = {1, 2, 3, 4, 5};
    printf("sum = %d\n", sum_array(a, 5));
    return 0;
}
""", ("s += a[i];", "s -= a[i];"), ("i < n", "i < n - 1"))

program("basic", "factorial", r"""
#include <stdio.h>

int factorial(int n) {
    int result = 1;
    int i = 1;
    while (i <= n) {
        result = result * i;
        i++;
    }
    return result;
}

int main(void) {
    printf("%d\n", factorial(5));
    return 0;
}
""", ("result = result * i;", "result = result + i;"), ("i <= n", "i < n"))

program("basic", "fibonacci", r"""
#include <stdio.h>

int fibonacci(int n) {
    int a = 0;
    int b = 1;
    for (int i = 0; i < n; i++) {
        int t = a + b;
        a = b;
        b = t;
    }
    return a;
}

int main(void) {
    printf("fib(10) = %d\n", fibonacci(10));
    return 0;
}
""", ("int t = a + b;", "int t = a * b;"), ("int b = 1;", "int b = 2;"))

program("basic", "is_even", r"""
#include <stdio.h>

int is_even(int n) {
    if (n % 2 == 0) {
        return 1;
    } else {
        return 0;
    }
}

int main(void) {
    printf("%d %d\n", is_even(4), is_even(7));
    return 0;
}
""", ("n % 2 == 0", "n % 2 == 1"), ("n % 2 == 0", "n % 4 == 0"))

program("basic", "count_digits", r"""
#include <stdio.h>

int count_digits(int n) {
    int count = 0;
    if (n == 0) {
        return 1;
    }
    while (n != 0) {
        n = n / 10;
        count++;
    }
    return count;
}

int main(void) {
    printf("%d\n", count_digits(12345));
    return 0;
}
""", ("n = n / 10;", "n = n / 100;"), ("return 1;", "return 0;"))

program("basic", "reverse_number", r"""
#include <stdio.h>

int reverse_number(int n) {
    int rev = 0;
    while (n > 0) {
        rev = rev * 10 + n % 10;
        n = n / 10;
    }
    return rev;
}

int main(void) {
    printf("%d\n", reverse_number(1234));
    return 0;
}
""", ("rev = rev * 10 + n % 10;", "rev = rev + n % 10;"), ("n > 0", "n > 9"))

program("basic", "power", r"""
#include <stdio.h>

int power(int base, int exp) {
    int result = 1;
    for (int i = 0; i < exp; i++) {
        result *= base;
    }
    return result;
}

int main(void) {
    printf("2^10 = %d\n", power(2, 10));
    return 0;
}
""", ("result *= base;", "result += base;"), ("int i = 0", "int i = 1"))

program("basic", "gcd", r"""
#include <stdio.h>

int gcd(int a, int b) {
    while (b != 0) {
        int t = b;
        b = a % b;
        a = t;
    }
    return a;
}

int main(void) {
    printf("gcd = %d\n", gcd(48, 18));
    return 0;
}
""", ("return a;", "return b;"), ("b = a % b;", "b = (a - 1) % b;"))

program("basic", "lcm", r"""
#include <stdio.h>

int gcd(int a, int b) {
    while (b != 0) {
        int t = b;
        b = a % b;
        a = t;
    }
    return a;
}

int lcm(int a, int b) {
    return a / gcd(a, b) * b;
}

int main(void) {
    printf("lcm = %d\n", lcm(4, 6));
    return 0;
}
""", ("return a / gcd(a, b) * b;", "return a * b;"), ("a = t;", "a = t + 0 * a;\n        a = a;"))

program("basic", "is_prime", r"""
#include <stdio.h>

int is_prime(int n) {
    if (n < 2) {
        return 0;
    }
    for (int i = 2; i * i <= n; i++) {
        if (n % i == 0) {
            return 0;
        }
    }
    return 1;
}

int main(void) {
    for (int k = 1; k <= 20; k++) {
        if (is_prime(k)) {
            printf("%d ", k);
        }
    }
    printf("\n");
    return 0;
}
""", ("n % i == 0", "n % i != 0"), ("i * i <= n", "i * i < n"))

program("basic", "sign", r"""
#include <stdio.h>

int sign(int x) {
    if (x > 0) {
        return 1;
    }
    if (x < 0) {
        return -1;
    }
    return 0;
}

int main(void) {
    printf("%d %d %d\n", sign(5), sign(-3), sign(0));
    return 0;
}
""", ("return -1;", "return 1;"), ("x > 0", "x >= 0"))

# famous

program("famous", "bubble_sort", r"""
#include <stdio.h>

void bubble_sort(int a[], int n) {
    for (int i = 0; i < n - 1; i++) {
        for (int j = 0; j < n - 1 - i; j++) {
            if (a[j] > a[j + 1]) {
                int t = a[j];
                a[j] = a[j + 1];
                a[j + 1] = t;
            }
        }
    }
}

int main(void) {
    int a[6] = {5, 1, 4, 2, 8, 0};
    bubble_sort(a, 6);
    for (int i = 0; i < 6; i++) {
        printf("%d ", a[i]);
    }
    printf("\n");
    return 0;
}
""", ("a[j] > a[j + 1]", "a[j] < a[j + 1]"), ("j < n - 1 - i", "j < n - 2 - i"))

program("famous", "binary_search", r"""
#include <stdio.h>

int binary_search(int a[], int n, int key) {
    int lo = 0;
    int hi = n - 1;
    while (lo <= hi) {
        int mid = lo + (hi - lo) / 2;
        if (a[mid] == key) {
            return mid;
        } else if (a[mid] < key) {
            lo = mid + 1;
        } else {
            hi = mid - 1;
        }
    }
    return -1;
}

int main(void) {
    int a[7] = {1, 3, 5, 7, 9, 11, 13};
    printf("%d\n", binary_search(a, 7, 9));
    return 0;
}
""", ("lo = mid + 1;", "hi = mid + 1;"), ("lo <= hi", "lo < hi"))

program("famous", "insertion_sort", r"""
#include <stdio.h>

void insertion_sort(int a[], int n) {
    for (int i = 1; i < n; i++) {
        int key = a[i];
        int j = i - 1;
        while (j >= 0 && a[j] > key) {
            a[j + 1] = a[j];
            j--;
        }
        a[j + 1] = key;
    }
}

int main(void) {
    int a[5] = {12, 11, 13, 5, 6};
    insertion_sort(a, 5);
    for (int i = 0; i < 5; i++) {
        printf("%d ", a[i]);
    }
    printf("\n");
    return 0;
}
""", ("a[j + 1] = key;", "a[j] = key;"), ("j >= 0", "j > 0"))

program("famous", "selection_sort", r"""
#include <stdio.h>

void selection_sort(int a[], int n) {
    for (int i = 0; i < n - 1; i++) {
        int min = i;
        for (int j = i + 1; j < n; j++) {
            if (a[j] < a[min]) {
                min = j;
            }
        }
        int t = a[min];
        a[min] = a[i];
        a[i] = t;
    }
}

int main(void) {
    int a[5] = {64, 25, 12, 22, 11};
    selection_sort(a, 5);
    for (int i = 0; i < 5; i++) {
        printf("%d ", a[i]);
    }
    printf("\n");
    return 0;
}
""", ("a[j] < a[min]", "a[j] > a[min]"), ("int j = i + 1", "int j = i + 2"))

program("famous", "sieve", r"""
#include <stdio.h>

int count_primes(int n) {
    int mark[101];
    int count = 0;
    for (int i = 0; i <= n; i++) {
        mark[i] = 1;
    }
    for (int p = 2; p * p <= n; p++) {
        if (mark[p]) {
            for (int k = p * p; k <= n; k += p) {
                mark[k] = 0;
            }
        }
    }
    for (int i = 2; i <= n; i++) {
        if (mark[i]) {
            count++;
        }
    }
    return count;
}

int main(void) {
    printf("%d\n", count_primes(100));
    return 0;
}
""", ("mark[k] = 0;", "mark[k] = 1;"), ("int k = p * p", "int k = p * 2 + p"))

program("famous", "hanoi_moves", r"""
#include <stdio.h>

int hanoi_moves(int n) {
    if (n == 0) {
        return 0;
    }
    return 2 * hanoi_moves(n - 1) + 1;
}

int main(void) {
    printf("%d\n", hanoi_moves(10));
    return 0;
}
""", ("return 2 * hanoi_moves(n - 1) + 1;", "return hanoi_moves(n - 1) + 1;"), ("n == 0", "n == 1"))

program("famous", "fast_power", r"""
#include <stdio.h>

long fast_power(long base, int exp) {
    long result = 1;
    while (exp > 0) {
        if (exp % 2 == 1) {
            result = result * base;
        }
        base = base * base;
        exp = exp / 2;
    }
    return result;
}

int main(void) {
    printf("%ld\n", fast_power(3, 13));
    return 0;
}
""", ("base = base * base;", "base = base + base;"), ("exp > 0", "exp > 1"))

program("famous", "matrix_trace", r"""
#include <stdio.h>

int trace(int m[], int n) {
    int t = 0;
    for (int i = 0; i < n; i++) {
        t += m[i * n + i];
    }
    return t;
}

int main(void) {
    int m[9] = {1, 2, 3, 4, 5, 6, 7, 8, 9};
    printf("trace = %d\n", trace(m, 3));
    return 0;
}
""", ("t += m[i * n + i];", "t += m[i];"), ("m[i * n + i]", "m[i * n + i - i / 2]"))

program("famous", "array_max", r"""
#include <stdio.h>

int array_max(int a[], int n) {
    int best = a[0];
    for (int i = 1; i < n; i++) {
        if (a[i] > best) {
            best = a[i];
        }
    }
    return best;
}

int main(void) {
    int a[6] = {3, 9, 2, 7, 9, 1};
    printf("max = %d\n", array_max(a, 6));
    return 0;
}
""", ("a[i] > best", "a[i] < best"), ("i < n", "i < n - 1"))

program("famous", "array_reverse", r"""
#include <stdio.h>

void array_reverse(int a[], int n) {
    int i = 0;
    int j = n - 1;
    while (i < j) {
        int t = a[i];
        a[i] = a[j];
        a[j] = t;
        i++;
        j--;
    }
}

int main(void) {
    int a[5] = {1, 2, 3, 4, 5};
    array_reverse(a, 5);
    for (int k = 0; k < 5; k++) {
        printf("%d ", a[k]);
    }
    printf("\n");
    return 0;
}
""", ("a[j] = t;", "a[j] = a[i];"), ("int j = n - 1;", "int j = n - 2;"))

program("famous", "palindrome_number", r"""
#include <stdio.h>

int is_palindrome(int n) {
    int original = n;
    int rev = 0;
    while (n > 0) {
        rev = rev * 10 + n % 10;
        n /= 10;
    }
    if (rev == original) {
        return 1;
    } else {
        return 0;
    }
}

int main(void) {
    printf("%d %d\n", is_palindrome(12321), is_palindrome(1234));
    return 0;
}
""", ("rev == original", "rev != original"), ("n /= 10;", "n /= 11;"))

program("famous", "collatz_steps", r"""
#include <stdio.h>

int collatz_steps(int n) {
    int steps = 0;
    while (n != 1) {
        if (n % 2 == 0) {
            n = n / 2;
        } else {
            n = 3 * n + 1;
        }
        steps++;
    }
    return steps;
}

int main(void) {
    printf("%d\n", collatz_steps(27));
    return 0;
}
""", ("n = 3 * n + 1;", "n = 3 * n - 1;"), ("int steps = 0;", "int steps = 1;"))

program("famous", "armstrong", r"""
#include <stdio.h>

int is_armstrong(int n) {
    int sum = 0;
    int t = n;
    while (t > 0) {
        int d = t % 10;
        sum += d * d * d;
        t /= 10;
    }
    if (sum == n) {
        return 1;
    } else {
        return 0;
    }
}

int main(void) {
    for (int k = 100; k < 1000; k++) {
        if (is_armstrong(k)) {
            printf("%d\n", k);
        }
    }
    return 0;
}
""", ("sum += d * d * d;", "sum += d * d;"), ("t > 0", "t > 1"))

program("famous", "perfect_number", r"""
#include <stdio.h>

int is_perfect(int n) {
    int sum = 0;
    for (int d = 1; d < n; d++) {
        if (n % d == 0) {
            sum += d;
        }
    }
    if (sum == n) {
        return 1;
    } else {
        return 0;
    }
}

int main(void) {
    for (int k = 2; k < 1000; k++) {
        if (is_perfect(k)) {
            printf("%d\n", k);
        }
    }
    return 0;
}
""", ("sum += d;", "sum += n;"), ("d < n", "d <= n"))

program("mirror", "count_up", r"""
#include <stdio.h>

void count_up(int n) {
    for (int i = 1; i <= n; i++) {
        printf("%d\n", i);
    }
}

int main(void) {
    count_up(5);
    return 0;
}
""", ("i++", "i--"), ("i <= n", "i < n"))

program("mirror", "count_down", r"""
#include <stdio.h>

void count_down(int n) {
    for (int i = n; i >= 1; i--) {
        printf("%d\n", i);
    }
}

int main(void) {
    count_down(5);
    return 0;
}
""", ("i--", "i++"), ("i >= 1", "i > 1"))

program("mirror", "sum_even", r"""
#include <stdio.h>

int sum_even(int n) {
    int s = 0;
    for (int i = 0; i <= n; i++) {
        if (i % 2 == 0) {
            s += i;
        }
    }
    return s;
}

int main(void) {
    printf("%d\n", sum_even(10));
    return 0;
}
""", ("i % 2 == 0", "i % 2 == 1"), ("i <= n", "i < n"))

program("mirror", "sum_odd", r"""
#include <stdio.h>

int sum_odd(int n) {
    int s = 0;
    for (int i = 0; i <= n; i++) {
        if (i % 2 == 1) {
            s += i;
        }
    }
    return s;
}

int main(void) {
    printf("%d\n", sum_odd(10));
    return 0;
}
""", ("i % 2 == 1", "i % 2 == 0"), ("int i = 0", "int i = 3"))

program("mirror", "first_index", r"""
#include <stdio.h>

int first_index(int a[], int n, int key) {
    for (int i = 0; i < n; i++) {
        if (a[i] == key) {
            return i;
        }
    }
    return -1;
}

int main(void) {
    int a[6] = {2, 7, 1, 7, 3, 7};
    printf("%d\n", first_index(a, 6, 7));
    return 0;
}
""", ("return i;", "return key;"), ("return -1;", "return 0;"))

program("mirror", "last_index", r"""
#include <stdio.h>

int last_index(int a[], int n, int key) {
    for (int i = n - 1; i >= 0; i--) {
        if (a[i] == key) {
            return i;
        }
    }
    return -1;
}

int main(void) {
    int a[6] = {2, 7, 1, 7, 3, 7};
    printf("%d\n", last_index(a, 6, 7));
    return 0;
}
""", ("return i;", "return key;"), ("i >= 0", "i > 0"))

program("mirror", "prefix_sum", r"""
#include <stdio.h>

void prefix_sum(int a[], int out[], int n) {
    int s = 0;
    for (int i = 0; i < n; i++) {
        s += a[i];
        out[i] = s;
    }
}

int main(void) {
    int a[5] = {1, 2, 3, 4, 5};
    int out[5];
    prefix_sum(a, out, 5);
    for (int i = 0; i < 5; i++) {
        printf("%d ", out[i]);
    }
    printf("\n");
    return 0;
}
""", ("s += a[i];", "s = a[i];"), ("out[i] = s;", "out[i] = s - a[0] + a[0] * (i > 0);"))

program("mirror", "suffix_sum", r"""
#include <stdio.h>

void suffix_sum(int a[], int out[], int n) {
    int s = 0;
    for (int i = n - 1; i >= 0; i--) {
        s += a[i];
        out[i] = s;
    }
}

int main(void) {
    int a[5] = {1, 2, 3, 4, 5};
    int out[5];
    suffix_sum(a, out, 5);
    for (int i = 0; i < 5; i++) {
        printf("%d ", out[i]);
    }
    printf("\n");
    return 0;
}
""", ("s += a[i];", "s = a[i];"), ("i >= 0", "i > 0"))

program("mirror", "min_index", r"""
#include <stdio.h>

int min_index(int a[], int n) {
    int best = 0;
    for (int i = 1; i < n; i++) {
        if (a[i] < a[best]) {
            best = i;
        }
    }
    return best;
}

int main(void) {
    int a[5] = {4, 2, 9, 1, 5};
    printf("%d\n", min_index(a, 5));
    return 0;
}
""", ("a[i] < a[best]", "a[i] > a[best]"), ("a[i] < a[best]", "a[i] <= a[best]"))

program("mirror", "max_index", r"""
#include <stdio.h>

int max_index(int a[], int n) {
    int best = 0;
    for (int i = 1; i < n; i++) {
        if (a[i] > a[best]) {
            best = i;
        }
    }
    return best;
}

int main(void) {
    int a[5] = {4, 2, 9, 1, 5};
    printf("%d\n", max_index(a, 5));
    return 0;
}
""", ("a[i] > a[best]", "a[i] < a[best]"), ("a[i] > a[best]", "a[i] >= a[best]"))

program("mirror", "increment_all", r"""
#include <stdio.h>

void increment_all(int a[], int n) {
    for (int i = 0; i < n; i++) {
        a[i] = a[i] + 1;
    }
}

int main(void) {
    int a[4] = {1, 2, 3, 4};
    increment_all(a, 4);
    printf("%d %d %d %d\n", a[0], a[1], a[2], a[3]);
    return 0;
}
""", ("a[i] = a[i] + 1;", "a[i] = a[i] - 1;"), ("i < n", "i < n - 1"))

program("mirror", "decrement_all", r"""
#include <stdio.h>

void decrement_all(int a[], int n) {
    for (int i = 0; i < n; i++) {
        a[i] = a[i] - 1;
    }
}

int main(void) {
    int a[4] = {1, 2, 3, 4};
    decrement_all(a, 4);
    printf("%d %d %d %d\n", a[0], a[1], a[2], a[3]);
    return 0;
}
""", ("a[i] = a[i] - 1;", "a[i] = a[i] + 1;"), ("int i = 0", "int i = 1"))

program("mirror", "rotate_left", r"""
#include <stdio.h>

void rotate_left(int a[], int n) {
    int first = a[0];
    for (int i = 0; i < n - 1; i++) {
        a[i] = a[i + 1];
    }
    a[n - 1] = first;
}

int main(void) {
    int a[5] = {1, 2, 3, 4, 5};
    rotate_left(a, 5);
    printf("%d %d %d %d %d\n", a[0], a[1], a[2], a[3], a[4]);
    return 0;
}
""", ("a[n - 1] = first;", "a[0] = first;"), ("i < n - 1", "i < n - 2"))

program("mirror", "rotate_right", r"""
#include <stdio.h>

void rotate_right(int a[], int n) {
    int last = a[n - 1];
    for (int i = n - 1; i > 0; i--) {
        a[i] = a[i - 1];
    }
    a[0] = last;
}

int main(void) {
    int a[5] = {1, 2, 3, 4, 5};
    rotate_right(a, 5);
    printf("%d %d %d %d %d\n", a[0], a[1], a[2], a[3], a[4]);
    return 0;
}
""", ("a[0] = last;", "a[n - 1] = last;"), ("i > 0", "i > 1"))

# unique

program("unique", "digit_sum", r"""
#include <stdio.h>

int digit_sum(int n) {
    int s = 0;
    while (n > 0) {
        s += n % 10;
        n /= 10;
    }
    return s;
}

int main(void) {
    printf("%d\n", digit_sum(98765));
    return 0;
}
""", ("s += n % 10;", "s += n;"), ("n > 0", "n > 9"))

program("unique", "leap_year", r"""
#include <stdio.h>

int is_leap(int y) {
    if (y % 400 == 0) {
        return 1;
    }
    if (y % 100 == 0) {
        return 0;
    }
    if (y % 4 == 0) {
        return 1;
    }
    return 0;
}

int main(void) {
    printf("%d %d %d\n", is_leap(2000), is_leap(1900), is_leap(2024));
    return 0;
}
""", ("y % 4 == 0", "y % 4 != 0"), ("y % 400 == 0", "y % 200 == 0"))

program("unique", "celsius", r"""
#include <stdio.h>

double to_fahrenheit(double c) {
    return c * 9.0 / 5.0 + 32.0;
}

int main(void) {
    for (int c = 0; c <= 100; c += 20) {
        printf("%d -> %f\n", c, to_fahrenheit(c));
    }
    return 0;
}
""", ("c * 9.0 / 5.0 + 32.0", "c * 5.0 / 9.0 + 32.0"), ("+ 32.0", "+ 23.0"))

program("unique", "grade", r"""
#include <stdio.h>

int grade_points(int score) {
    if (score >= 90) {
        return 4;
    } else if (score >= 80) {
        return 3;
    } else if (score >= 70) {
        return 2;
    } else if (score >= 60) {
        return 1;
    }
    return 0;
}

int main(void) {
    printf("%d %d %d\n", grade_points(95), grade_points(72), grade_points(40));
    return 0;
}
""", ("return 4;", "return 0;"), ("score >= 80", "score > 80"))

program("unique", "day_name", r"""
#include <stdio.h>

int weekday_hours(int day) {
    int hours = 0;
    switch (day) {
    case 0:
        hours = 0;
        break;
    case 6:
        hours = 4;
        break;
    default:
        hours = 8;
        break;
    }
    return hours;
}

int main(void) {
    for (int d = 0; d < 7; d++) {
        printf("%d: %d\n", d, weekday_hours(d));
    }
    return 0;
}
""", ("hours = 8;", "hours = 0;"), ("case 6:", "case 5:"))

program("unique", "bit_count", r"""
#include <stdio.h>

int bit_count(unsigned int x) {
    int count = 0;
    while (x != 0) {
        count += x & 1;
        x = x >> 1;
    }
    return count;
}

int main(void) {
    printf("%d\n", bit_count(255));
    return 0;
}
""", ("x = x >> 1;", "x = x >> 2;"), ("count += x & 1;", "count += x & 3;"))

program("unique", "triangle_type", r"""
#include <stdio.h>

int triangle_type(int a, int b, int c) {
    if (a + b <= c || a + c <= b || b + c <= a) {
        return -1;
    }
    if (a == b && b == c) {
        return 3;
    }
    if (a == b || b == c || a == c) {
        return 2;
    }
    return 1;
}

int main(void) {
    printf("%d %d %d %d\n", triangle_type(3, 3, 3), triangle_type(3, 3, 5), triangle_type(3, 4, 5), triangle_type(1, 2, 8));
    return 0;
}
""", ("return 3;", "return 1;"), ("a + b <= c", "a + b < c"))

program("unique", "clamp", r"""
#include <stdio.h>

int clamp(int x, int lo, int hi) {
    if (x < lo) {
        return lo;
    }
    if (x > hi) {
        return hi;
    }
    return x;
}

int main(void) {
    printf("%d %d %d\n", clamp(-5, 0, 10), clamp(5, 0, 10), clamp(50, 0, 10));
    return 0;
}
""", ("return hi;", "return lo;"), ("x > hi", "x > hi + 1"))

program("unique", "count_occurrences", r"""
#include <stdio.h>

int count_occurrences(int a[], int n, int key) {
    int c = 0;
    for (int i = 0; i < n; i++) {
        if (a[i] == key) {
            c++;
        }
    }
    return c;
}

int main(void) {
    int a[8] = {1, 3, 3, 7, 3, 1, 9, 3};
    printf("%d\n", count_occurrences(a, 8, 3));
    return 0;
}
""", ("a[i] == key", "a[i] != key"), ("int i = 0", "int i = 2"))

program("unique", "second_largest", r"""
#include <stdio.h>

int second_largest(int a[], int n) {
    int first = a[0];
    int second = -1000000;
    for (int i = 1; i < n; i++) {
        if (a[i] > first) {
            second = first;
            first = a[i];
        } else if (a[i] > second && a[i] != first) {
            second = a[i];
        }
    }
    return second;
}

int main(void) {
    int a[6] = {12, 35, 1, 10, 34, 1};
    printf("%d\n", second_largest(a, 6));
    return 0;
}
""", ("return second;", "return first;"), ("a[i] != first", "a[i] != first + 1"))

program("unique", "average", r"""
#include <stdio.h>

double average(int a[], int n) {
    double s = 0.0;
    for (int i = 0; i < n; i++) {
        s += a[i];
    }
    return s / n;
}

int main(void) {
    int a[4] = {2, 4, 6, 9};
    printf("avg = %f\n", average(a, 4));
    return 0;
}
""", ("return s / n;", "return s * n;"), ("return s / n;", "return s / (n + 1);"))

program("unique", "dot_product", r"""
#include <stdio.h>

int dot_product(int a[], int b[], int n) {
    int s = 0;
    for (int i = 0; i < n; i++) {
        s += a[i] * b[i];
    }
    return s;
}

int main(void) {
    int a[3] = {1, 2, 3};
    int b[3] = {4, 5, 6};
    printf("%d\n", dot_product(a, b, 3));
    return 0;
}
""", ("s += a[i] * b[i];", "s += a[i] + b[i];"), ("i < n", "i < n - 1"))

program("unique", "count_positive", r"""
#include <stdio.h>

int count_positive(int a[], int n) {
    int c = 0;
    for (int i = 0; i < n; i++) {
        if (a[i] > 0) {
            c++;
        }
    }
    return c;
}

int main(void) {
    int a[7] = {-3, 0, 4, 9, -1, 2, 0};
    printf("%d\n", count_positive(a, 7));
    return 0;
}
""", ("a[i] > 0", "a[i] < 0"), ("a[i] > 0", "a[i] >= 0"))

program("unique", "swap_values", r"""
#include <stdio.h>

int main(void) {
    int x = 3;
    int y = 8;
    int t = x;
    x = y;
    y = t;
    printf("x = %d, y = %d\n", x, y);
    return 0;
}
""", ("y = t;", "y = x;"), ("int t = x;", "int t = x + 0 * y;\n    t = t;"))


def mutate(source, change, name, kind):
    old, new = change
    if old not in source:
        sys.exit(f"{name}: {kind} pattern {old!r} not found")
    out = source.replace(old, new, 1)
    if out == source:
        sys.exit(f"{name}: {kind} mutation is a no-op")
    return out


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("out", type=pathlib.Path)
    args = parser.parse_args()
    if len(PROGRAMS) != 56:
        sys.exit(f"expected 56 programs, have {len(PROGRAMS)}")
    for name, (category, source, obvious, subtle) in sorted(PROGRAMS.items()):
        texts = {
            "correct": source,
            "obvious": mutate(source, obvious, name, "obvious"),
            "subtle": mutate(source, subtle, name, "subtle"),
        }
        for variant, text in texts.items():
            path = args.out / variant / category / f"{name}.c"
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text)
    print(f"wrote {3 * len(PROGRAMS)} files under {args.out}")


if __name__ == "__main__":
    main()
