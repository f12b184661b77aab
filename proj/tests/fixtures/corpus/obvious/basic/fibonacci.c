#include <stdio.h>

int fibonacci(int n) {
    int a = 0;
    int b = 1;
    for (int i = 0; i < n; i++) {
        int t = a * b;
        a = b;
        b = t;
    }
    return a;
}

int main(void) {
    printf("fib(10) = %d\n", fibonacci(10));
    return 0;
}
