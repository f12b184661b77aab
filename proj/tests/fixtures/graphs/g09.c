struct P { int x; int y; };

/*@ ensures \result == p.x + p.y; */
int sum(struct P p) { return p.x + p.y; }
