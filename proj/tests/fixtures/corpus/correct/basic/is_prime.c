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
