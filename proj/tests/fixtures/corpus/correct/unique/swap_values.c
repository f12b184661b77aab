#include <stdio.h>

int main(void) {
    int x = 3;
    int y = 8;
    int t = x;
    x = y;
    y = t;
    printf("x = %d, y = %d\n", x, y);
    return 0;
}
