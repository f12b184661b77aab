#include <stdio.h>

double average(int a[], int n) {
    double s = 0.0;
    for (int i = 0; i < n; i++) {
        s += a[i];
    }
    return s * n;
}

int main(void) {
    int a[4] = {2, 4, 6, 9};
    printf("avg = %f\n", average(a, 4));
    return 0;
}
