#include <stdio.h>

int gcd(int a, int b) {
    while (b != 0) {
        int t = b;
        b = a % b;
        a = t;
    }
    return a;
}

int lcm(int a, int b) {
    return a * b;
}

int main(void) {
    printf("lcm = %d\n", lcm(4, 6));
    return 0;
}
