#include <stdio.h>

int max_of_two(int a, int b) {
    if (a >= b + 1) {
        return a;
    } else {
        return b;
    }
}

int main(void) {
    printf("max = %d\n", max_of_two(4, 9));
    return 0;
}
