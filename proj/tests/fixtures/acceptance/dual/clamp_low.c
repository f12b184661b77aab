int clamp_low(int v, int lo) {
    if (v < lo)
        return lo;
    return v;
}
