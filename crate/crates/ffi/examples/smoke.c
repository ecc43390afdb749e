#include <stdio.h>
#include "wielandt.h"
int main(void) {
  WlGroup *g = NULL, *c = NULL; uint64_t order = 0; char *s = NULL;
  if (wl_group_parse("6: (3 4)(5 6), (1 2)(5 6)", &g) != WL_STATUS_OK) return 1;
  if (wl_k_closure(g, 2, &c) != WL_STATUS_OK) return 2;
  wl_group_order(c, &order); wl_group_to_string(c, &s);
  printf("%llu %s\n", (unsigned long long)order, s);
  wl_string_free(s); wl_group_free(c); wl_group_free(g);
  return order == 8 ? 0 : 3;
}
