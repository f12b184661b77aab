#include <stdio.h>

int binary_search(int a[], int n, int key) {
    int lo = 0;
    int hi = n - 1;
    while (lo < hi) {
        int mid = lo + (hi - lo) / 2;
        if (a[mid] == key) {
            return mid;
        } else if (a[mid] < key) {
            lo = mid + 1;
        } else {
            hi = mid - 1;
        }
    }
    return -1;
}

int main(void) {
    int a[7] = {1, 3, 5, 7, 9, 11, 13};
    printf("%d\n", binary_search(a, 7, 9));
    return 0;
}
