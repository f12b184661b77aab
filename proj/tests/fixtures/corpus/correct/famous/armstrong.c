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
