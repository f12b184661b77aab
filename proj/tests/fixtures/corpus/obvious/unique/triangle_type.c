#include <stdio.h>

int triangle_type(int a, int b, int c) {
    if (a + b <= c || a + c <= b || b + c <= a) {
        return -1;
    }
    if (a == b && b == c) {
        return 1;
    }
    if (a == b || b == c || a == c) {
        return 2;
    }
    return 1;
}

int main(void) {
    printf("%d %d %d %d\n", triangle_type(3, 3, 3), triangle_type(3, 3, 5), triangle_type(3, 4, 5), triangle_type(1, 2, 8));
    return 0;
}
