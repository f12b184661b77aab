#include <stdio.h>

int collatz_steps(int n) {
    int steps = 0;
    while (n != 1) {
        if (n % 2 == 0) {
            n = n / 2;
        } else {
            n = 3 * n - 1;
        }
        steps++;
    }
    return steps;
}

int main(void) {
    printf("%d\n", collatz_steps(27));
    return 0;
}
