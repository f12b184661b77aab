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
