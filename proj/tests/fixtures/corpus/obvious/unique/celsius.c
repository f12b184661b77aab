#include <stdio.h>

double to_fahrenheit(double c) {
    return c * 5.0 / 9.0 + 32.0;
}

int main(void) {
    for (int c = 0; c <= 100; c += 20) {
        printf("%d -> %f\n", c, to_fahrenheit(c));
    }
    return 0;
}
