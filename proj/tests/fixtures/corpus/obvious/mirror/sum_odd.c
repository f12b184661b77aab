#include <stdio.h>

int sum_odd(int n) {
    int s = 0;
    for (int i = 0; i <= n; i++) {
        if (i % 2 == 0) {
            s += i;
        }
    }
    return s;
}

int main(void) {
    printf("%d\n", sum_odd(10));
    return 0;
}
