class NullProgressBar(object):

    def __enter__(self):
        return self

    def __exit__(self, *args):
        pass

    def update(self, n=1):
        pass

    def set_postfix_str(self, s, refresh=True):
        pass


def build_pbar_context(pbar_type, tqdm_kwargs=None):
    """Returns a progress bar context: a tqdm bar if `pbar_type` is 'tqdm', a no-op otherwise."""
    if pbar_type == 'tqdm':
        from tqdm import tqdm
        pbar_context = tqdm(**(tqdm_kwargs or dict()))
    else:
        pbar_context = NullProgressBar()

    return pbar_context
