#include <stdio.h>

void rotate_right(int a[], int n) {
    int last = a[n - 1];
    for (int i = n - 1; i > 0; i--) {
        a[i] = a[i - 1];
    }
    a[n - 1] = last;
}

int main(void) {
    int a[5] = {1, 2, 3, 4, 5};
    rotate_right(a, 5);
    printf("%d %d %d %d %d\n", a[0], a[1], a[2], a[3], a[4]);
    return 0;
}
