#include <stdio.h>

int main() {
    int x;
    double d;
    scanf("%d", &x);
    scanf("%lf", &d);
    printf("%d %f\n", x, d);
    return 0;
}
