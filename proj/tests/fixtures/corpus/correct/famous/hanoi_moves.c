#include <stdio.h>

int hanoi_moves(int n) {
    if (n == 0) {
        return 0;
    }
    return 2 * hanoi_moves(n - 1) + 1;
}

int main(void) {
    printf("%d\n", hanoi_moves(10));
    return 0;
}
