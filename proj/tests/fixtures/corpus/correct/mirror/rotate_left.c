#include <stdio.h>

void rotate_left(int a[], int n) {
    int first = a[0];
    for (int i = 0; i < n - 1; i++) {
        a[i] = a[i + 1];
    }
    a[n - 1] = first;
}

int main(void) {
    int a[5] = {1, 2, 3, 4, 5};
    rotate_left(a, 5);
    printf("%d %d %d %d %d\n", a[0], a[1], a[2], a[3], a[4]);
    return 0;
}
