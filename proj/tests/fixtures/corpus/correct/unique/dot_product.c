#include <stdio.h>

int dot_product(int a[], int b[], int n) {
    int s = 0;
    for (int i = 0; i < n; i++) {
        s += a[i] * b[i];
    }
    return s;
}

int main(void) {
    int a[3] = {1, 2, 3};
    int b[3] = {4, 5, 6};
    printf("%d\n", dot_product(a, b, 3));
    return 0;
}
