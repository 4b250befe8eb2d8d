def format_timedelta(td):
    if td.days < 0:
        raise ValueError('timedelta must be positive')
    hours, sec = divmod(td.seconds + td.days * 86400, 3600)
    mins, sec = divmod(sec, 60)
    millis = td.microseconds // 1000

    return f'{hours:02}:{mins:02}:{sec:02}.{millis:03}'


def elapsed_ms(start, end):
    """Milliseconds between two `time.perf_counter()` readings, rounded to an integer."""
    return int(round((end - start) * 1000))
