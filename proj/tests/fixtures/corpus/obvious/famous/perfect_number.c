#include <stdio.h>

int is_perfect(int n) {
    int sum = 0;
    for (int d = 1; d < n; d++) {
        if (n % d == 0) {
            sum += n;
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
