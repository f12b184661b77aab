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
