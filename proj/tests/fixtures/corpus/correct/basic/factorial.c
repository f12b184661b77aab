#include <stdio.h>

int factorial(int n) {
    int result = 1;
    int i = 1;
    while (i <= n) {
        result = result * i;
        i++;
    }
    return result;
}

int main(void) {
    printf("%d\n", factorial(5));
    return 0;
}
