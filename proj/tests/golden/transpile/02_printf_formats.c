#include <stdio.h>

int main(void) {
    int x = 42;
    double ratio = 0.5;
    char c = 'z';
    printf("x=%d\n", x);
    printf("ratio %f and %c", ratio, c);
    printf("\n");
    printf("%d%d\n", x, x);
    printf("100%%\n");
    return 0;
}
