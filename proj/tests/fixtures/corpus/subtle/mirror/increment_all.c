#include <stdio.h>

void increment_all(int a[], int n) {
    for (int i = 0; i < n - 1; i++) {
        a[i] = a[i] + 1;
    }
}

int main(void) {
    int a[4] = {1, 2, 3, 4};
    increment_all(a, 4);
    printf("%d %d %d %d\n", a[0], a[1], a[2], a[3]);
    return 0;
}
