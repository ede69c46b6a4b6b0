#include "icr.h"
#include <stdio.h>
#include <string.h>

#define CHECK(cond)                                                   \
  do {                                                                \
    if (!(cond)) {                                                    \
      char msg[256];                                                  \
      icr_last_error(msg, sizeof msg);                                \
      fprintf(stderr, "line %d: %s (%s)\n", __LINE__, #cond, msg);    \
      return 1;                                                       \
    }                                                                 \
  } while (0)

int main(void) {
  IcrGroup *g = NULL;
  CHECK(icr_group_parse("Z2+Z2", 0, &g) == ICR_STATUS_OK);
  uint64_t classes = 0;
  CHECK(icr_classify(g, ICR_FILTER_ASSOCIATIVE, &classes) == ICR_STATUS_OK);
  CHECK(classes == 10);

  IcrRing *r = NULL;
  CHECK(icr_ring_from_pair(g, "(0220),(0220)", &r) == ICR_STATUS_OK);
  uint32_t table[16];
  CHECK(icr_ring_product_table(r, table, 16) == ICR_STATUS_OK);
  const uint32_t expect[16] = {0, 2, 2, 0, 2, 0, 0, 2, 2, 0, 0, 2, 0, 2, 2, 0};
  CHECK(memcmp(table, expect, sizeof table) == 0);
  IcrProps props;
  CHECK(icr_ring_props(r, &props) == ICR_STATUS_OK);
  CHECK(props.associative && props.commutative);

  IcrRing *bad = NULL;
  CHECK(icr_ring_from_pair(g, "(0220)", &bad) == ICR_STATUS_INVALID_INPUT);
  CHECK(bad == NULL && icr_last_error(NULL, 0) > 1);

  icr_ring_free(r);
  icr_group_free(g);
  printf("ok %s\n", icr_version());
  return 0;
}
