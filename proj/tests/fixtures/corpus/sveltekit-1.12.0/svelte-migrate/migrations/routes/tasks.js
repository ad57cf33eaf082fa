export const STANDALONE_ENDPOINT = '3292701';
export const PAGE_ENDPOINT = '3292699';
export const PAGE_LOAD = '3292693';
export const PAGE_MODULE_CTX = '3292722';
export const PAGE_DATA_PROP = '3292707';
