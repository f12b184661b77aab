#include <stdio.h>

int sum_array(int a[], int n) {
    int s = 0;
    for (int i = 0; i < n - 1; i++) {
        s += a[i];
    }
    return s;
}

int main(void) {
    int a[5] = {1, 2, 3, 4, 5};
    printf("sum = %d\n", sum_array(a, 5));
    return 0;
}
