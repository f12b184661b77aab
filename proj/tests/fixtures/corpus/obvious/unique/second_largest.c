#include <stdio.h>

int second_largest(int a[], int n) {
    int first = a[0];
    int second = -1000000;
    for (int i = 1; i < n; i++) {
        if (a[i] > first) {
            second = first;
            first = a[i];
        } else if (a[i] > second && a[i] != first) {
            second = a[i];
        }
    }
    return first;
}

int main(void) {
    int a[6] = {12, 35, 1, 10, 34, 1};
    printf("%d\n", second_largest(a, 6));
    return 0;
}
