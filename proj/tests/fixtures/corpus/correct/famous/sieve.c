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
