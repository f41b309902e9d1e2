/** One observed (user, item, value) triplet.
 *
 * Mirrors the core's rating record: constructible with no arguments, then
 * field-assigned.
 */
export class Rating {
  user = 0;
  item = 0;
  value = 0;
}
